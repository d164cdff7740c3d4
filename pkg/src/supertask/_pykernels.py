"""Pure-Python kernels.  Same signatures as the compiled ``_kernels`` module."""


def rho(successors, start):
    """Tail length and period of the run ``start, f(start), ...``.

    ``successors[i]`` is the index reached from state ``i``.  Records the
    first-visit step of every state, so the first repeat yields both numbers.
    """
    seen = [-1] * len(successors)
    step = 0
    x = start
    while seen[x] < 0:
        seen[x] = step
        step += 1
        x = successors[x]
    return seen[x], step - seen[x]


def spigot_digits(count):
    """First ``count`` decimal digits of pi (3, 1, 4, ...), bounded spigot."""
    if count <= 0:
        return []
    size = 10 * count // 3 + 1
    a = [2] * size
    out = []
    predigit = 0
    nines = 0
    for _ in range(count + 1):
        q = 0
        for i in range(size - 1, 0, -1):
            x = 10 * a[i] + q * (i + 1)
            d = 2 * i + 1
            q, a[i] = divmod(x, d)
        x = 10 * a[0] + q
        q, a[0] = divmod(x, 10)
        if q == 9:
            nines += 1
        elif q == 10:
            out.append(predigit + 1)
            out.extend([0] * nines)
            predigit = 0
            nines = 0
        else:
            out.append(predigit)
            out.extend([9] * nines)
            predigit = q
            nines = 0
    out.append(predigit)
    out.extend([9] * nines)
    # out[0] is the placeholder predigit emitted before the leading 3
    return out[1:count + 1]


def period_scan(seq, max_tail, max_period):
    """Smallest ``(tail, period)`` such that ``seq[i] == seq[i + period]`` for
    every ``i >= tail``; ``None`` when no pair within the limits fits."""
    n = len(seq)
    for mu in range(max_tail + 1):
        for k in range(1, max_period + 1):
            i = mu
            while i + k < n and seq[i] == seq[i + k]:
                i += 1
            if i + k >= n:
                return mu, k
    return None
