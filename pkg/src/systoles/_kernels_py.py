"""Reference tree kernels (pure Python, any ordered field).

Triples are handled as parallel tuples ``vals`` and ``slopes``; a slope is a
normalized primitive integer vector ``(p, q)`` with ``q > 0`` or
``(p, q) == (1, 0)``.  The same functions serve the exact rational backend
and act as the fallback for the compiled float kernels in ``_ckernels``.
"""

from heapq import heappop, heappush

from .errors import InvariantViolation, NonTermination

MAX_STEPS = 10**6


def norm_slope(p, q):
    if q < 0 or (q == 0 and p < 0):
        return -p, -q
    return p, q


def flip_slope(u, v, t):
    """The primitive vector other than ``t`` completing ``u, v`` to a triangle."""
    s = norm_slope(u[0] + v[0], u[1] + v[1])
    if s == t:
        return norm_slope(u[0] - v[0], u[1] - v[1])
    return s


def flip(vals, slopes, i, shift):
    j, k = (i + 1) % 3, (i + 2) % 3
    new = vals[j] * vals[k] - vals[i] - shift
    s = flip_slope(slopes[j], slopes[k], slopes[i])
    vals = vals[:i] + (new,) + vals[i + 1:]
    slopes = slopes[:i] + (s,) + slopes[i + 1:]
    return vals, slopes


def descend(vals, slopes, shift, tol=0, max_steps=MAX_STEPS, visit=None):
    """Greedy walk to a triple where no flip strictly decreases its entry.

    Among decreasing flips the largest decrease wins; equal decreases go to
    the entry with the smaller slope.  ``tol`` is a relative slack used by
    the float backend so that rounding noise cannot cause a flip.
    """
    vals, slopes = tuple(vals), tuple(slopes)
    for steps in range(max_steps):
        if visit is not None:
            visit(vals, slopes)
        best = None
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            gain = vals[i] - (vals[j] * vals[k] - vals[i] - shift)
            if gain <= 0 or (tol and gain <= tol * abs(vals[i])):
                continue
            key = (-gain, slopes[i])
            if best is None or key < best[0]:
                best = (key, i)
        if best is None:
            return vals, slopes, steps
        vals, slopes = flip(vals, slopes, best[1], shift)
    raise NonTermination(f"descent did not finish in {max_steps} steps")


def iter_regions(vals, slopes, shift, tol=0, visit=None, check=True):
    """Yield ``(value, slope)`` for every region, in ascending order.

    Best-first search over the tree starting from the minimal triple.  Every
    frontier entry carries the two regions it was flipped from and the
    region it replaced; popping it releases its two children.
    """
    vals, slopes, _ = descend(vals, slopes, shift, tol, visit=visit)
    heap = []
    for i in range(3):
        heappush(heap, (vals[i], slopes[i], None))
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        w = vals[j] * vals[k] - vals[i] - shift
        s = flip_slope(slopes[j], slopes[k], slopes[i])
        if visit is not None:
            visit((vals[j], vals[k], w), (slopes[j], slopes[k], s))
        if check and not (_geq(w, vals[j], tol) and _geq(w, vals[k], tol)):
            raise InvariantViolation(f"first flip {w} below its parents {vals}")
        heappush(heap, (w, s, (vals[j], slopes[j], vals[k], slopes[k])))
    while heap:
        v, s, info = heappop(heap)
        yield v, s
        if info is None:
            continue
        av, as_, bv, bs = info
        for xv, xs, yv, ys in ((av, as_, bv, bs), (bv, bs, av, as_)):
            # triple (X, W; Y): flipping Y gives the child
            child = xv * v - yv - shift
            cs = flip_slope(xs, s, ys)
            if visit is not None:
                visit((xv, v, child), (xs, s, cs))
            if check and not (_gt(child, v, tol) and _gt(child, xv, tol)):
                raise InvariantViolation(
                    f"frontier not monotone: child {child} of ({xv}, {v})")
            heappush(heap, (child, cs, (xv, xs, v, s)))


def _gt(a, b, tol):
    if tol:
        return a > b * (1 - tol)
    return a > b


def _geq(a, b, tol):
    if tol:
        return a >= b * (1 - tol)
    return a >= b


def enumerate_values(vals, slopes, shift, k, tol=0, check=True):
    """The ``k`` smallest regions as a list of ``(value, p, q)``."""
    out = []
    if k <= 0:
        return out
    for v, s in iter_regions(vals, slopes, shift, tol, check=check):
        out.append((v, s[0], s[1]))
        if len(out) >= k:
            break
    return out
