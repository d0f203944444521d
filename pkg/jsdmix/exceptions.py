"""
Exceptions for JSDMix
"""


class ValidationError(Exception):
    """Error called for inputs that are well-formed but violate a precondition,
    e.g., weights not summing to one or supports that are not disjoint.

    """
    def __init__(self, msg):
        self.message = 'Input Error: {}'.format(msg)
        super().__init__(self.message)


class AlphabetMismatchError(Exception):
    """Error when PMFs over different alphabets are combined."""
    def __init__(self, expected, got):
        self.message = 'Alphabet mismatch: expected labels {} but found {}'.format(expected, got)
        super().__init__(self.message)


class UnboundedDerivativeError(Exception):
    """Error when an analytic derivative hits a logarithm of zero with a nonzero coefficient."""
    def __init__(self, where, symbols):
        self.symbols = list(symbols)
        self.message = 'Derivative unbounded in {} at symbol index(es) {}'.format(where, self.symbols)
        super().__init__(self.message)


class BoundsBracketingError(Exception):
    """Error when the exact Bayes error falls outside the divergence bounds."""
    def __init__(self, lower, exact, upper, units):
        self.message = 'Bounds do not bracket Bayes error: {} <= {} <= {} fails (units={})'.format(
            lower, exact, upper, units)
        super().__init__(self.message)


class ScenarioFormatError(Exception):
    """Error called when a scenario file cannot be read into a MixtureScenario."""
    def __init__(self, path, msg, line=None):
        self.path = str(path)
        self.line = line
        where = self.path if line is None else '{}:{}'.format(self.path, line)
        self.message = 'Scenario file uninterpretable ({}): {}'.format(where, msg)
        super().__init__(self.message)
