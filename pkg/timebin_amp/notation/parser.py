"""Parser and transformer for ket notation."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from lark import Lark, Token, Transformer
from lark.exceptions import LarkError

from ..errors import NotationError
from ..fock.modes import FockBasis, ModeId, mode
from ..fock.states import PureState


class KetTransformer(Transformer):
    """Transform a Lark parse tree into a PureState."""

    def real_coefficient(self, items):
        return complex(float(items[0]))

    def complex_coefficient(self, items):
        """Transform ( [SIGN] NUMBER SIGN NUMBER j )."""
        if len(items) == 4:
            real_sign, real, imag_sign, imag = items
        else:
            real_sign = None
            real, imag_sign, imag = items
        re_part = float(real) * (-1.0 if real_sign == "-" else 1.0)
        im_part = float(imag) * (-1.0 if imag_sign == "-" else 1.0)
        return complex(re_part, im_part)

    def occupation(self, items):
        """Transform [INT *] MODE_LABEL into (mode, count)."""
        count = int(items[0]) if len(items) == 2 else 1
        return parse_mode(str(items[-1])), count

    def vacuum_ket(self, items):
        return FockBasis.vacuum()

    def fock_ket(self, items):
        counts: dict[ModeId, int] = {}
        for m, n in items:
            counts[m] = counts.get(m, 0) + n
        return FockBasis.from_counts(counts)

    def term(self, items):
        """Transform [SIGN] [coefficient] ket into (basis, amplitude)."""
        sign = 1.0
        amplitude = 1 + 0j
        basis = FockBasis.vacuum()
        for item in items:
            if isinstance(item, Token) and item.type == "SIGN":
                sign = -1.0 if item == "-" else 1.0
            elif isinstance(item, complex):
                amplitude = item
            elif isinstance(item, FockBasis):
                basis = item
        return basis, sign * amplitude

    def start(self, items):
        return PureState.from_terms(items)


class KetParser:
    """Ket notation parser."""

    def __init__(self, grammar_path: str | Path | None = None):
        """Initialize parser with grammar."""
        if grammar_path is None:
            grammar_path = Path(__file__).parent / "grammar.lark"

        with open(grammar_path) as f:
            self.parser = Lark(
                f.read(),
                start="start",
                parser="earley",
                ambiguity="resolve",
            )
        self.transformer = KetTransformer()

    def parse(self, text: str) -> PureState:
        """Parse ket notation into a state."""
        try:
            tree = self.parser.parse(text)
        except LarkError as e:
            raise NotationError(f"Invalid ket notation: {e}") from e
        return self.transformer.transform(tree)

    def parse_file(self, path: str | Path) -> PureState:
        """Parse a file holding ket notation."""
        with open(path) as f:
            return self.parse(f.read())


@lru_cache(maxsize=1)
def default_parser() -> KetParser:
    return KetParser()


def parse_state(text: str) -> PureState:
    """Parse ket notation with the shared parser."""
    return default_parser().parse(text)


def parse_mode(text: str) -> ModeId:
    """Parse ``S_H@a1`` into a ModeId."""
    try:
        sublevel, spatial = text.strip().split("@")
        bin_label, pol_label = sublevel.split("_")
        return mode(spatial, bin_label, pol_label)
    except ValueError as e:
        raise NotationError(f"Invalid mode label: {text!r}") from e
