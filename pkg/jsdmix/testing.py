"""
Tolerance-aware comparison helpers used by the test-suite and by the
observation checks in :py:mod:`jsdmix.experiments.verify`.
"""

import logging
import sys
from typing import Callable, Dict, List, Union

import numpy as np
from pydantic import BaseModel

logger = logging.getLogger(__name__)


def _handle_return(passfail: bool, label: str, message: str, return_message: bool, quiet: bool = False):
    """Log a '*label*...PASSED' (or FAILED plus reason) line and return the verdict."""

    if not quiet:
        if passfail:
            logger.info(f'    {label:.<53}PASSED')
        else:
            logger.error(f'    {label:.<53}FAILED')
            logger.error(f'    {message:.<53}')

    if return_message:
        return passfail, message
    else:
        return passfail


def _array_text(arr: np.ndarray, indent: str = '    ') -> str:
    text = np.array_str(arr, max_line_width=120, precision=12, suppress_small=True)
    return '\n'.join(indent + ln for ln in text.splitlines())


def compare_values(expected,
                   computed,
                   label: str = None,
                   *,
                   atol: float = 1.e-6,
                   rtol: float = 1.e-16,
                   equal_nan: bool = False,
                   passnone: bool = False,
                   quiet: bool = False,
                   return_message: bool = False,
                   return_handler: Callable = None) -> bool:
    """Returns True if two floats or float arrays are element-wise equal within a tolerance.

    Parameters
    ----------
    expected : float or float array-like
        Reference value against which `computed` is compared.
    computed : float or float array-like
        Input value to compare against `expected`.
    label : str, optional
        Label for passed and error messages. Defaults to calling function name.
    atol : float, optional
        Absolute tolerance.
    rtol : float, optional
        Relative tolerance. Tiny by default so `atol` dominates.
    equal_nan : bool, optional
        Compare NaN's as equal. Infinities of equal sign always compare equal.
    passnone : bool, optional
        Return True when both expected and computed are None.
    quiet : bool, optional
        Whether to log the return message.
    return_message : bool, optional
        Whether to return a (verdict, message) tuple.
    return_handler : function, optional
        Replaces :py:func:`_handle_return` to control logging and returning.

    Notes
    -----
    Passes when ``absolute(computed - expected) <= (atol + rtol * absolute(expected))`` everywhere.

    """
    label = label or sys._getframe().f_back.f_code.co_name
    pass_message = f'\t{label:.<66}PASSED'
    if return_handler is None:
        return_handler = _handle_return

    if passnone and expected is None and computed is None:
        return return_handler(True, label, pass_message, return_message, quiet)

    try:
        xptd, cptd = np.asarray(expected, dtype=float), np.asarray(computed, dtype=float)
    except (TypeError, ValueError):
        return return_handler(False, label, f"\t{label}: inputs not cast-able to float ndarray.", return_message,
                              quiet)

    if xptd.shape != cptd.shape:
        return return_handler(False, label, f"\t{label}: computed shape ({cptd.shape}) does not match ({xptd.shape}).",
                              return_message, quiet)

    isclose = np.isclose(cptd, xptd, rtol=rtol, atol=atol, equal_nan=equal_nan)
    allclose = bool(np.all(isclose))

    if allclose:
        return return_handler(True, label, pass_message, return_message, quiet)

    digits = abs(int(np.log10(atol))) + 2
    tolerance = f'to atol={atol}' + (f', rtol={rtol}' if rtol > 1.e-12 else '')
    if xptd.shape == ():
        message = (f'\t{label}: computed value ({float(cptd):.{digits}f}) does not match ({float(xptd):.{digits}f}) '
                   f'{tolerance} by difference ({float(cptd - xptd):.{digits}f}).')
    else:
        diff = np.where(isclose, 0.0, cptd - xptd)
        message = (f'\t{label}: computed value does not match {tolerance}.\n  Expected:\n{_array_text(xptd)}\n'
                   f'  Observed:\n{_array_text(cptd)}\n'
                   f'  Difference (passed elements are zeroed):\n{_array_text(diff)}\n')

    return return_handler(False, label, message, return_message, quiet)


def compare(expected,
            computed,
            label: str = None,
            *,
            quiet: bool = False,
            return_message: bool = False,
            return_handler: Callable = None) -> bool:
    """Returns True if two integers, strings, booleans, or integer arrays are element-wise equal.

    Parameters
    ----------
    expected : int, bool, str or int array-like
        Reference value against which `computed` is compared.
    computed : int, bool, str or int array-like
        Input value to compare against `expected`.
    label : str, optional
        Label for passed and error messages. Defaults to calling function name.

    """
    label = label or sys._getframe().f_back.f_code.co_name
    pass_message = f'\t{label:.<66}PASSED'
    if return_handler is None:
        return_handler = _handle_return

    xptd, cptd = np.asarray(expected), np.asarray(computed)

    if xptd.shape != cptd.shape:
        return return_handler(False, label, f"\t{label}: computed shape ({cptd.shape}) does not match ({xptd.shape}).",
                              return_message, quiet)

    allclose = bool(np.asarray(xptd == cptd).all())
    if allclose:
        message = pass_message
    elif xptd.shape == ():
        message = f'\t{label}: computed value ({cptd}) does not match ({xptd}).'
    else:
        message = (f'\t{label}: computed value does not match.\n  Expected:\n{_array_text(xptd)}\n'
                   f'  Observed:\n{_array_text(cptd)}\n')

    return return_handler(allclose, label, message, return_message, quiet)


def _compare_recursive(expected, computed, atol, rtol, _prefix=False) -> List:

    errors = []
    name = _prefix or "root"
    prefix = name + "."

    if isinstance(expected, BaseModel):
        expected = expected.model_dump()

    if isinstance(computed, BaseModel):
        computed = computed.model_dump()

    if isinstance(expected, (str, bool, int)) and not isinstance(expected, (float, np.floating)):
        if expected != computed:
            errors.append((name, f"Value {expected} did not match {computed}."))

    elif isinstance(expected, (list, tuple)):
        if not isinstance(computed, (list, tuple, np.ndarray)) or len(expected) != len(computed):
            errors.append((name, "Iterable lengths did not match"))
        else:
            for i, (item1, item2) in enumerate(zip(expected, computed)):
                errors.extend(_compare_recursive(item1, item2, _prefix=prefix + str(i), atol=atol, rtol=rtol))

    elif isinstance(expected, dict):
        if not isinstance(computed, dict):
            errors.append((name, f"Type {type(computed)} is not a mapping"))
            return errors
        extra = computed.keys() - expected.keys()
        missing = expected.keys() - computed.keys()
        if extra:
            errors.append((name, f"Found extra keys {extra}"))
        if missing:
            errors.append((name, f"Missing keys {missing}"))

        for k in expected.keys() & computed.keys():
            errors.extend(_compare_recursive(expected[k], computed[k], _prefix=prefix + str(k), atol=atol, rtol=rtol))

    elif isinstance(expected, (float, np.number, np.ndarray)):
        passfail, msg = compare_values(expected, computed, atol=atol, rtol=rtol, return_message=True, quiet=True)
        if not passfail:
            errors.append((name, "Arrays differ." + msg))

    elif expected is None:
        if computed is not None:
            errors.append((name, "'None' does not match."))

    else:
        errors.append((name, f"Type {type(expected)} not understood -- stopping recursive compare."))

    return errors


def compare_recursive(expected: Union[Dict, BaseModel],
                      computed: Union[Dict, BaseModel],
                      label: str = None,
                      *,
                      atol: float = 1.e-6,
                      rtol: float = 1.e-16,
                      forgive: List[str] = None,
                      quiet: bool = False,
                      return_message: bool = False,
                      return_handler: Callable = None) -> bool:
    """Recursively compares nested structures such as dictionaries, lists, and pydantic models.

    Parameters
    ----------
    expected : dict or BaseModel
        Reference value against which `computed` is compared.
    computed : dict or BaseModel
        Input value to compare against `expected`.
    label : str, optional
        Label for passed and error messages. Defaults to calling function name.
    atol : float, optional
        Absolute tolerance for float leaves.
    rtol : float, optional
        Relative tolerance for float leaves.
    forgive : list, optional
        Keys in top level which may change between `expected` and `computed` without triggering failure.

    """
    label = label or sys._getframe().f_back.f_code.co_name
    if return_handler is None:
        return_handler = _handle_return

    errors = _compare_recursive(expected, computed, atol=atol, rtol=rtol)

    forgive = [(fg if fg.startswith('root.') else 'root.' + fg) for fg in (forgive or [])]
    errors = [e for e in errors if not any(e[0].startswith(fg) for fg in forgive)]

    message = []
    for path, reason in sorted(errors):
        message.append(path)
        message.append("    " + reason)

    ret_msg_str = "\n".join(message)

    return return_handler(len(ret_msg_str) == 0, label, ret_msg_str, return_message, quiet)
