"""Exception types shared across the package.

Three severities matter to callers (and fix the command-line exit code).
Usage errors flag malformed or out-of-range input.  Domain negatives answer
a well-posed question with "no such object"; they are expected outcomes,
not bugs.  Falsification alarms fire on conditions that are mathematically
guaranteed never to occur on valid input, so raising one means either this
package or the underlying theory is broken.  Alarms must never be caught
and silenced.
"""


class UsageError(ValueError):
    """Malformed, inconsistent, or out-of-range input."""


class ParseError(UsageError):
    """Unreadable text form of a coloring or matching."""


class UnbalancedColors(UsageError):
    """Coloring does not contain equally many red and blue points."""


class SharedEndpoint(UsageError):
    """Two edges share an endpoint where distinct endpoints are required."""


class InvalidMatching(UsageError):
    """Matching fails validation against its coloring."""


class OddN(UsageError):
    """Construction requires an even number of point pairs."""


class OutOfRange(UsageError):
    """Numeric parameter outside its documented range."""


class SizeMismatch(UsageError):
    """Two arcs to be joined have different sizes."""


class ColorMismatch(UsageError):
    """Arc join would create a monochromatic edge."""


class NotFourBlock(UsageError):
    """Coloring does not consist of exactly four blocks."""


class NotSixBlockPattern(UsageError):
    """Block sizes do not fit the six-block witness pattern."""


class EmptyAntipodalCore(UsageError):
    """Operation needs at least one monochromatic antipodal pair."""


class TooSmall(UsageError):
    """Point set below the minimum size for this operation."""


class SizeLimitExceeded(UsageError):
    """Instance larger than the enforced search limit (override via budget
    or environment variable)."""


class DomainNegative(Exception):
    """A well-posed question whose answer is that no such object exists."""


class Unachievable(DomainNegative):
    """Requested crossing number lies outside the achievable set."""


class BudgetExceeded(DomainNegative):
    """Search node budget exhausted before the answer was complete.

    ``partial`` carries whatever incomplete result was assembled, when the
    operation has something meaningful to hand back.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class FalsificationAlarm(Exception):
    """Impossible-by-theory condition observed.  Never silence this."""


class NoBalancedCuts(FalsificationAlarm):
    """No antipodal cut pair splits the monochromatic-antipodal core into
    four color-balanced groups."""


class WitnessBelowBound(FalsificationAlarm):
    """Best witness matching has fewer crossings than the guaranteed bound."""


class SweepMismatch(FalsificationAlarm):
    """Exhaustive min-max sweep disagrees with the closed-form bound."""


class NoBalancedWindow(FalsificationAlarm):
    """No contiguous 14-point window of the residual sequence is balanced."""


class WindowSpectrumGap(FalsificationAlarm):
    """A 14-point window misses a crossing number it is guaranteed to have."""


class CrossWindowCrossing(FalsificationAlarm):
    """Composed matching's recount differs from the sum of window targets."""
