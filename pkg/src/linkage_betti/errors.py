"""Exception types shared across the library."""


class DomainError(ValueError):
    """A structurally valid input lies outside an operation's mathematical domain.

    Raised for things like a Betti degree outside 0..n-3 or a nonpositive bar
    length.  Malformed input (wrong type, unparseable text) keeps raising the
    usual TypeError / ValueError.
    """
