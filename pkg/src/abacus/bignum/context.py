"""Runtime-settable precision context."""

from .. import errors


class PrecisionContext:
    """Working precision, expressed in 32-bit words, plus display digits.

    words     -- number of 32-bit limbs in a float significand
    bits      -- derived significand width, 32 * words
    output_digits -- significant decimal digits used when printing
    """

    __slots__ = ("words", "output_digits")

    DEFAULT_WORDS = 8
    DEFAULT_OUTPUT_DIGITS = 8

    def __init__(self, words: int = DEFAULT_WORDS,
                 output_digits: int = DEFAULT_OUTPUT_DIGITS):
        self.words = 0
        self.output_digits = 0
        self.set_words(words, reset_output=False)
        self.set_output_digits(output_digits)

    @property
    def bits(self) -> int:
        return 32 * self.words

    def set_words(self, words, reset_output: bool = True) -> None:
        """Set the significand width; optionally re-derive display digits.

        The derived rule output_digits = 8 * words reproduces 16 printed
        digits at 2 words and 48 at 6 words.
        """
        if not isinstance(words, int) or isinstance(words, bool) or words < 1:
            raise errors.DomainError(
                f"precision must be a positive integer number of words, got {words!r}")
        self.words = words
        if reset_output:
            self.output_digits = 8 * words

    def set_output_digits(self, digits) -> None:
        if not isinstance(digits, int) or isinstance(digits, bool) or digits < 1:
            raise errors.DomainError(
                f"output precision must be a positive integer, got {digits!r}")
        self.output_digits = digits

    def copy(self) -> "PrecisionContext":
        c = PrecisionContext.__new__(PrecisionContext)
        c.words = self.words
        c.output_digits = self.output_digits
        return c

    def __eq__(self, other):
        return (isinstance(other, PrecisionContext)
                and self.words == other.words
                and self.output_digits == other.output_digits)

    def __repr__(self):
        return f"PrecisionContext(words={self.words}, output_digits={self.output_digits})"
