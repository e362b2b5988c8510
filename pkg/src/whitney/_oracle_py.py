"""Pure-Python ideal counter; the reference twin of ``_oracle.pyx``."""


def count_ideals(n, lower, limit):
    """Count down-sets of sizes 0..n.

    ``lower[i]`` is the bitmask of lower covers of element ``i``, with the
    elements numbered along a linear extension.  Returns None once more than
    ``limit`` ideals have been seen.
    """
    counts = [0] * (n + 1)
    total = 0
    stack = [(0, 0, 0)]
    pop = stack.pop
    push = stack.append
    while stack:
        i, mask, size = pop()
        # walk the exclude branch in place, pushing include branches
        while i < n:
            if not lower[i] & ~mask:
                push((i + 1, mask | (1 << i), size + 1))
            i += 1
        counts[size] += 1
        total += 1
        if total > limit:
            return None
    return counts
