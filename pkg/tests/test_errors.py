import pytest

from src.errors import (
    CacheFormatError,
    ExpressionError,
    NotDivisibleInBox,
    WorkbenchError,
)


def test_hierarchy_is_rooted_at_workbench_error():
    for cls in (CacheFormatError, ExpressionError, NotDivisibleInBox):
        assert issubclass(cls, WorkbenchError)


def test_expression_error_message_and_caret():
    exc = ExpressionError("unexpected '$'", position=3)
    assert str(exc) == "syntax error at position 3: unexpected '$'"
    assert exc.highlight("l1 $ l2") == "l1 $ l2\n   ^"


def test_expression_error_without_position():
    exc = ExpressionError("no generic forms", kind="identifier")
    assert str(exc) == "identifier error: no generic forms"
    assert exc.highlight("p12") == "p12"


def test_expression_error_is_catchable_as_base():
    with pytest.raises(WorkbenchError):
        raise ExpressionError("bad", 0, kind="arity")
