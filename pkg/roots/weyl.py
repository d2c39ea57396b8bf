"""
The symmetric group S_n as the Weyl group of type A_{n-1}.

Permutations are tuples of images, ``sigma[i - 1] = sigma(i)``.
"""

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(sigma: Permutation, pi: Permutation) -> Permutation:
    """(sigma o pi)(i) = sigma(pi(i))."""
    return tuple(sigma[p - 1] for p in pi)


def invert(sigma: Permutation) -> Permutation:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma, start=1):
        inverse[image - 1] = i
    return tuple(inverse)


def transposition(n: int, i: int, j: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return tuple(images)


def simple_transposition(n: int, i: int) -> Permutation:
    return transposition(n, i, i + 1)


def length(sigma: Permutation) -> int:
    """Number of inversions."""
    n = len(sigma)
    return sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])


def reduced_word(sigma: Permutation) -> list[int]:
    """Lexicographically smallest reduced word [i_1, ..., i_r] with sigma = s_{i_1} ... s_{i_r}."""
    word = []
    current = sigma
    n = len(sigma)
    while length(current) > 0:
        # s_i is a left descent of current iff current^-1(i) > current^-1(i+1)
        inverse = invert(current)
        for i in range(1, n):
            if inverse[i - 1] > inverse[i]:
                word.append(i)
                current = compose(simple_transposition(n, i), current)
                break
    return word
