"""Permutations of {1..N} and their actions on polynomials in z, lambda.

Internally a permutation is a tuple ``img`` of 0-based images,
``sigma(i) = img[i]``.  :class:`Perm` wraps that tuple for the public API;
hot loops elsewhere in the package use bare tuples and the helpers below.
"""
from itertools import permutations

__all__ = [
    "Perm",
    "perm_sign",
    "compose",
    "inverse",
    "transposition",
    "identity",
    "all_perms",
    "permute_exponents",
    "act",
    "is_multisymmetric",
    "MODES",
]

MODES = ("z", "l", "zl")


def identity(n):
    return tuple(range(n))


def perm_sign(img):
    """Parity of a permutation via its cycle decomposition."""
    seen = [False] * len(img)
    sign = 1
    for i in range(len(img)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = img[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def compose(a, b):
    """``(a o b)(i) = a(b(i))``."""
    return tuple(a[i] for i in b)


def inverse(a):
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai] = i
    return tuple(inv)


def transposition(n, i, j):
    """The transposition swapping 0-based ``i`` and ``j``."""
    img = list(range(n))
    img[i], img[j] = j, i
    return tuple(img)


def all_perms(n):
    return list(permutations(range(n)))


def permute_exponents(img, e):
    """Exponent vector of ``sigma x^e sigma^{-1}``: entry ``k`` moves to ``sigma(k)``."""
    out = [0] * len(e)
    for k, a in enumerate(e):
        out[img[k]] = a
    return tuple(out)


class Perm:
    """A permutation of {1..N}.

    >>> s = Perm.from_oneline([2, 1, 3])
    >>> s.sign, s.oneline()
    (-1, [2, 1, 3])
    """

    __slots__ = ("img", "sign")

    def __init__(self, img):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 0..{len(img) - 1}: {img}")
        self.img = img
        self.sign = perm_sign(img)

    @classmethod
    def from_oneline(cls, images):
        return cls(i - 1 for i in images)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, i, j):
        """Transposition of the 1-based letters ``i`` and ``j``."""
        return cls(transposition(n, i - 1, j - 1))

    @property
    def n(self):
        return len(self.img)

    def __call__(self, i):
        """Image of the 1-based letter ``i``."""
        return self.img[i - 1] + 1

    def __mul__(self, other):
        return Perm(compose(self.img, other.img))

    def inverse(self):
        return Perm(inverse(self.img))

    def oneline(self):
        return [i + 1 for i in self.img]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm({self.oneline()})"


def _img(sigma):
    return sigma.img if isinstance(sigma, Perm) else tuple(sigma)


def act(sigma, p, mode="zl"):
    """Left action of ``sigma`` on ``p`` in z1..zN, l1..lN.

    Substitutes ``z_k -> z_sigma(k)`` (mode ``"z"``), ``l_k -> l_sigma(k)``
    (mode ``"l"``) or both (mode ``"zl"``).
    """
    img = _img(sigma)
    n = len(img)
    if len(p.vars) != 2 * n:
        raise ValueError(f"polynomial has {len(p.vars)} variables, expected {2 * n}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    mapping = list(range(2 * n))
    if mode in ("z", "zl"):
        mapping[:n] = img
    if mode in ("l", "zl"):
        mapping[n:] = [n + k for k in img]
    return p.permute_vars(mapping)


def is_multisymmetric(p):
    """Invariance under simultaneous permutations of z and lambda."""
    n = len(p.vars) // 2
    return all(act(transposition(n, i, i + 1), p, "zl") == p for i in range(n - 1))
