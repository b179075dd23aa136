from .assertions import assert_raises_message as assert_raises_message
from .assertions import eq_ as eq_
from .assertions import is_ as is_
from .assertions import ne_ as ne_
