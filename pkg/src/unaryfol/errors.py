"""Exception types raised across the package."""


class AutomatonError(ValueError):
    pass


class WidthMismatch(AutomatonError):
    pass


class SignatureMismatch(AutomatonError):
    pass


class UnknownState(AutomatonError):
    pass


class UnknownVariable(AutomatonError):
    pass


class DuplicateVariable(AutomatonError):
    pass


class InvalidPermutation(AutomatonError):
    pass


class EpsilonInLanguage(AutomatonError):
    pass


class NotFirstOrder(AutomatonError):
    pass


class NoAcceptingMember(AutomatonError):
    pass


class InvalidEncoding(ValueError):
    def __init__(self, track, reason=""):
        self.track = track
        msg = f"invalid encoding on track {track!r}"
        super().__init__(f"{msg}: {reason}" if reason else msg)


class AutFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FormulaSyntaxError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class ScopeError(ValueError):
    pass
