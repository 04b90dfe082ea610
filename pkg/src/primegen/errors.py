class RefusalError(Exception):
    """A computation was declined because it exceeds a configured resource bound.

    Raised instead of returning a possibly-wrong or unbounded-cost answer,
    e.g. exact trial division above its bound or enumeration sweeps past
    their caps. Distinct from ValueError, which marks domain misuse.
    """
