"""Action of the mapping class group on Teichmüller coordinates.

Only the effective ``PSL(2, Z)`` quotient is modelled, generated by ``S``
(order two) and ``T``.  A word is a tuple of letters from ``S``, ``T``,
``Tinv`` read as a composition of maps: ``McgWord(("S", "T"))`` is ``S∘T``,
so ``T`` acts first.

In terms of the Dehn twists (torus) or half twists (sphere) ``sigma`` and
``tau``: on the torus ``S = tau^-1 sigma tau^-1`` and ``T = tau``; on the
sphere ``S = sigma tau^-2`` and ``T = tau``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EPS, S11, TeichPoint, _point_unchecked
from .errors import NonTermination, UnsupportedGenerator
from .rep import base_traces

LETTERS = ("S", "T", "Tinv")
_INVERSE = {"S": "S", "T": "Tinv", "Tinv": "T"}

#: Derived constants expressing the classical twist generators.
SIGMA_TAU = {
    "s11": {"S": "tau^-1 sigma tau^-1", "T": "tau"},
    "s04": {"S": "sigma tau^-2", "T": "tau"},
}

MAX_REDUCTION_STEPS = 10**6


def _reduce(letters):
    out = []
    for ch in letters:
        if ch not in _INVERSE:
            raise UnsupportedGenerator(f"unknown mapping class letter {ch!r}")
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return tuple(out)


@dataclass(frozen=True)
class McgWord:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(tuple(self.letters)))

    @classmethod
    def parse(cls, text):
        """Parse ``"S T Tinv"``; ``T^-1`` and ``Ti`` also mean ``Tinv``."""
        if isinstance(text, McgWord):
            return text
        if not isinstance(text, str):
            return cls(tuple(text))
        names = {"s": "S", "t": "T", "tinv": "Tinv", "t^-1": "Tinv", "t-": "Tinv", "ti": "Tinv"}
        toks = []
        for tok in text.replace(",", " ").replace("*", " ").split():
            key = tok.lower()
            if key not in names:
                raise UnsupportedGenerator(f"unknown mapping class letter {tok!r}")
            toks.append(names[key])
        return cls(tuple(toks))

    def __mul__(self, other):
        return McgWord(self.letters + McgWord.parse(other).letters)

    def inverse(self):
        return McgWord(tuple(_INVERSE[ch] for ch in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(self.letters) if self.letters else "id"


IDENTITY = McgWord()


def apply_S(p: TeichPoint) -> TeichPoint:
    a, b = p.alpha, p.beta
    if p.surface is S11:
        n = a * a + b * b
        return _point_unchecked(p.surface, b / n, a / n)
    return _point_unchecked(p.surface, 1 / a, 1 / b)


def apply_T(p: TeichPoint) -> TeichPoint:
    a, b = p.alpha, p.beta
    if p.surface is S11:
        n = 1 + b * b
        return _point_unchecked(p.surface, a / n, a * b / n)
    return _point_unchecked(p.surface, (a * b + a + 1) / b, a * b + a)


def apply_Tinv(p: TeichPoint) -> TeichPoint:
    a, b = p.alpha, p.beta
    if p.surface is S11:
        # T keeps the first coordinate's ratio: T(a, b) = (a', b') has b = b'/a'
        r = b / a
        return _point_unchecked(p.surface, a * (1 + r * r), r)
    return _point_unchecked(p.surface, a * b / (a + b + 1), (b + 1) / a)


_ACT = {"S": apply_S, "T": apply_T, "Tinv": apply_Tinv}


def apply_letter(p, letter):
    return _ACT[letter](p)


def apply_word(p: TeichPoint, g) -> TeichPoint:
    """Image ``g(p)``; the rightmost letter acts first."""
    g = McgWord.parse(g)
    for ch in reversed(g.letters):
        p = _ACT[ch](p)
    return p


#: Label substitutions: the base traces at ``g(m)`` expressed through the
#: tree values at ``m``.
_LABELS = {
    "S": ("y0", "x0", "w0"),
    "ST": ("z0", "x0", "y0"),
}


def act_on_labels(g) -> tuple:
    """Substitution ``(x0, y0, z0) -> ...`` induced by ``S`` or ``ST``."""
    key = str(g).replace(" ", "") if not isinstance(g, McgWord) else "".join(g.letters)
    if key not in _LABELS:
        raise UnsupportedGenerator(f"no label action recorded for {g!r}")
    return _LABELS[key]


def relabel(traces, g):
    """Apply :func:`act_on_labels` to a mapping or BaseTraces."""
    d = traces._asdict() if hasattr(traces, "_asdict") else dict(traces)
    return tuple(d[name] for name in act_on_labels(g))


# Words whose action shifts the base triple by one flip.  Base traces
# (x, y, z) at q become these triples at g(q):
#   S      -> (y, x, xy - z)      flips z
#   T      -> (x, z, xz - y)      flips y
#   T S T  -> (z, y, yz - x)      flips x
_FLIP_WORDS = (("T", "S", "T"), ("T",), ("S",))
_ROTATE = {1: ("S", "T"), 2: ("S", "T", "S", "T")}


def reduce_to_fundamental(p: TeichPoint, max_steps: int = MAX_REDUCTION_STEPS):
    """Move ``p`` so that its minimal triple sits in the base slots.

    Returns ``(g, q)`` with ``q = apply_word(p, g)``.  At ``q`` no flip of the
    base triple decreases a value and ``x0(q)`` is the minimum of the
    triple; when several rotations achieve that, the one with
    ``y0(q) <= z0(q)`` is preferred.
    """
    steps, q = reduction_path(p, max_steps)
    word = ()
    for step in steps:
        word = step + word
    return McgWord(word), q


def reduction_path(p: TeichPoint, max_steps: int = MAX_REDUCTION_STEPS):
    """The steps of :func:`reduce_to_fundamental` in the order applied.

    Each step is one of the flip words or rotations listed above, so the
    base slots at ``q`` can be traced back to regions at ``p``.
    """
    shift = p.surface.markoff_shift
    steps = []
    q = p
    tol = 0 if p.exact else 1e-13
    for _ in range(max_steps):
        x, y, z, _w = base_traces(q)
        flips = (y * z - x - shift, x * z - y - shift, x * y - z - shift)
        olds = (x, y, z)
        best, best_gain = None, 0
        for i in range(3):
            gain = olds[i] - flips[i]
            if gain > tol * max(1.0, abs(olds[i])) and (best is None or gain > best_gain):
                best, best_gain = i, gain
        if best is None:
            break
        step = _FLIP_WORDS[best]
        for ch in reversed(step):
            q = _ACT[ch](q)
        steps.append(step)
    else:
        raise NonTermination(f"reduction of {p} did not finish in {max_steps} steps")

    x, y, z, _w = base_traces(q)
    # rotations by ST: (x,y,z) -> (z,x,y); by (ST)^2: (x,y,z) -> (y,z,x)
    options = [(0, (x, y, z)), (1, (z, x, y)), (2, (y, z, x))]
    lo = min(x, y, z)
    close = [o for o in options if _near(o[1][0], lo, p.exact)]
    sorted_ok = [o for o in close if o[1][1] <= o[1][2] or _near(o[1][1], o[1][2], p.exact)]
    k = (sorted_ok or close)[0][0]
    if k:
        rot = _ROTATE[k]
        for ch in reversed(rot):
            q = _ACT[ch](q)
        steps.append(rot)
    return steps, q


def _near(a, b, exact):
    if exact:
        return a == b
    return abs(a - b) <= EPS * max(1.0, abs(a), abs(b))
