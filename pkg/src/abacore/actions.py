"""Extended affine symmetric group actions, symbol pairing, and the crystal
machinery on top of it.

Group words are sequences of tokens: "s0", "s1", ... for the generators
sigma_0, sigma_1, ..., "t" for tau and "T" for tau inverse.  The same word
type acts on two sides:

* on the left on e-tuples (rank e, parameter l), letters applied right to
  left;
* on the right on l-tuples (rank l, parameter e), letters applied left to
  right.

sigma_c for 1 <= c <= rank-1 swaps coordinates c-1 and c; sigma_0 is the
wrapped swap with a +-parameter shift, equal to tau^-1 sigma_1 tau.  At
rank 1 the group degenerates to the powers of tau and sigma_0 acts as the
identity.
"""

from .nodes import add_node, i_signature, remove_node
from .partitions import (
    as_charges,
    as_multipartition,
    beta_set,
    check_modulus,
    partition_of_symbol,
)
from .quotients import tau_e, tau_e_inverse, tau_l, tau_l_inverse


def parse_word(word, rank):
    """Normalize a group word to a tuple of tokens, checking sigma indices."""
    if isinstance(word, str):
        word = word.split()
    word = tuple(word)
    for tok in word:
        if tok in ("t", "T"):
            continue
        if tok.startswith("s") and tok[1:].isdigit() and int(tok[1:]) < rank:
            continue
        raise ValueError("rank mismatch")
    return word


def _swap(s, c):
    s = list(s)
    s[c - 1], s[c] = s[c], s[c - 1]
    return tuple(s)


def _letter_left(tok, s, l):
    e = len(s)
    if tok == "t":
        return (s[-1] + l,) + s[:-1]
    if tok == "T":
        return s[1:] + (s[0] - l,)
    c = int(tok[1:])
    if c == 0:
        if e == 1:
            return s
        return (s[-1] + l,) + s[1:-1] + (s[0] - l,)
    return _swap(s, c)


def _letter_right(s, tok, e):
    l = len(s)
    if tok == "t":
        return s[1:] + (s[0] + e,)
    if tok == "T":
        return (s[-1] - e,) + s[:-1]
    c = int(tok[1:])
    if c == 0:
        if l == 1:
            return s
        return (s[-1] - e,) + s[1:-1] + (s[0] + e,)
    return _swap(s, c)


def act_charge_e(word, s, l):
    """Left action on e-tuples with parameter l; letters applied right to left."""
    s = tuple(int(x) for x in s)
    word = parse_word(word, len(s))
    for tok in reversed(word):
        s = _letter_left(tok, s, int(l))
    return s


def act_charge_l(s, word, e):
    """Right action on l-tuples with parameter e; letters applied left to right."""
    s = tuple(int(x) for x in s)
    word = parse_word(word, len(s))
    for tok in word:
        s = _letter_right(s, tok, int(e))
    return s


def pair_symbols(X, Y):
    """The basic two-symbol pairing; swaps the window sizes.

    With |X| <= |Y|: each x, smallest first, claims the largest remaining
    y <= x, or failing that the largest remaining y.  The unclaimed y's
    migrate into the new X (so |X'| = |Y|), the claimed ones form the new
    Y.  With |X| > |Y| the mirror rule applies: each y, largest first,
    claims the smallest remaining x >= y, else the smallest remaining; the
    unclaimed x's migrate into the new Y.  Applying the procedure twice
    gives back the input.

    Read on beta-sets over a common window bottom, a value only in X is an
    addable node, a value only in Y a removable one, and the migrating
    values are exactly the unclaimed letters of the i-signature after the
    claimed ones cancel, which is what makes the transported action agree
    with the crystal one.
    """
    X = tuple(int(x) for x in X)
    Y = tuple(int(y) for y in Y)
    for seq in (X, Y):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError("symbol entries must be strictly increasing")
    if len(X) <= len(Y):
        avail = list(Y)
        claimed = []
        for x in X:
            pick = None
            for idx in range(len(avail) - 1, -1, -1):
                if avail[idx] <= x:
                    pick = idx
                    break
            if pick is None:
                pick = len(avail) - 1
            claimed.append(avail.pop(pick))
        return tuple(sorted(list(X) + avail)), tuple(sorted(claimed))
    avail = list(X)
    claimed = []
    for y in reversed(Y):
        pick = None
        for idx in range(len(avail)):
            if avail[idx] >= y:
                pick = idx
                break
        if pick is None:
            pick = 0
        claimed.append(avail.pop(pick))
    return tuple(sorted(claimed)), tuple(sorted(list(Y) + avail))


def _pair_components(mp, charges, c):
    """Replace components (c-1, c) by their pairing; their charges swap."""
    a, b = c - 1, c
    bottom = min(charges[a] - len(mp[a]), charges[b] - len(mp[b]))
    X = beta_set(mp[a], charges[a], charges[a] - bottom)
    Y = beta_set(mp[b], charges[b], charges[b] - bottom)
    Xp, Yp = pair_symbols(X, Y)
    new_charges = list(charges)
    new_charges[a] = bottom + len(Xp)
    new_charges[b] = bottom + len(Yp)
    new_mp = list(mp)
    new_mp[a] = partition_of_symbol(Xp, new_charges[a])
    new_mp[b] = partition_of_symbol(Yp, new_charges[b])
    return tuple(new_mp), tuple(new_charges)


def psi(mp, charges, word, e):
    """The component-level bijection lifting the right charge action.

    tau rotates components one step down with the wrapped charge raised by
    e; sigma_c pairs components (c-1, c); sigma_0 is carried through the
    conjugation tau^-1 sigma_1 tau.  The output charges always equal the
    right action on the input charges.
    """
    mp = as_multipartition(mp)
    l = len(mp)
    charges = as_charges(charges, l)
    e = check_modulus(e)
    word = parse_word(word, l)
    for tok in word:
        if tok == "t":
            mp = mp[1:] + (mp[0],)
            charges = charges[1:] + (charges[0] + e,)
        elif tok == "T":
            mp = (mp[-1],) + mp[:-1]
            charges = (charges[-1] - e,) + charges[:-1]
        elif tok == "s0":
            if l > 1:
                mp, charges = psi(mp, charges, ("T", "s1", "t"), e)
        else:
            mp, charges = _pair_components(mp, charges, int(tok[1:]))
    return mp, charges


def sigma_ordinary(i, mp, charges, e):
    """Toggle every addable and every removable i-node at once."""
    mp = as_multipartition(mp)
    charges = as_charges(charges, len(mp))
    e = check_modulus(e)
    if not 0 <= i < e:
        raise ValueError("residue out of range")
    out = []
    for c, p in enumerate(mp):
        rows = list(p) + [0]
        new_rows = []
        for a, cur in enumerate(rows, start=1):
            above = rows[a - 2] if a >= 2 else None
            below = rows[a] if a < len(rows) else 0
            length = cur
            if (above is None or above > cur) and (cur + 1 - a + charges[c]) % e == i:
                length = cur + 1  # addable i-node in this row
            elif cur > below and (cur - a + charges[c]) % e == i:
                length = cur - 1  # removable i-node in this row
            new_rows.append(length)
        while new_rows and new_rows[-1] == 0:
            new_rows.pop()
        out.append(tuple(new_rows))
    return as_multipartition(out)


def _sigma_ordinary_symbols(i, mp, charges, e):
    """Second route: swap runners (i-1, i) of the transposed e-symbol.

    For i = 0 the wrap applies: the top runner moves into slot 0 with its
    charge raised by l, slot 0 into the top with its charge lowered by l.
    Used to cross-check the node-toggle route.
    """
    mp = as_multipartition(mp)
    l = len(mp)
    charges = as_charges(charges, l)
    mp_e, s_e = tau_e(*tau_l_inverse(mp, charges, e), e)
    mp_e, s_e = list(mp_e), list(s_e)
    if i == 0:
        mp_e = [mp_e[-1]] + mp_e[1:-1] + [mp_e[0]]
        s_e = [s_e[-1] + l] + s_e[1:-1] + [s_e[0] - l]
    else:
        mp_e[i - 1], mp_e[i] = mp_e[i], mp_e[i - 1]
        s_e[i - 1], s_e[i] = s_e[i], s_e[i - 1]
    p, m = tau_e_inverse(tuple(mp_e), tuple(s_e))
    new_mp, new_charges = tau_l(p, m, e, l)
    assert new_charges == charges
    return new_mp


def sigma_star(i, mp, charges, e):
    """The crystal-side involution: swap the reduced signature's letter counts.

    With a A's and r R's surviving reduction, remove the good removable
    r - a times when r >= a, otherwise add the good addable a - r times.
    Meant for multipartitions reachable from the empty one by good-node
    additions; there it is an involution and preserves the block weight.
    """
    mp = as_multipartition(mp)
    charges = as_charges(charges, len(mp))
    e = check_modulus(e)
    sig = i_signature(mp, charges, e, i)
    a = sum(1 for letter, _ in sig.reduced if letter == "A")
    r = len(sig.reduced) - a
    for _ in range(abs(r - a)):
        sig = i_signature(mp, charges, e, i)
        node = sig.good_removable if r >= a else sig.good_addable
        assert node is not None
        mp = remove_node(mp, node) if r >= a else add_node(mp, node)
    return mp


def duality_transport(i, mp, charges, e):
    """sigma_star computed on the other side of the level-rank transpose.

    Carry the multipartition to its transposed e-symbol, pair the runners
    (i-1, i) there (for i = 0: rotate the top runner down with charge +l,
    pair runners (0, 1), rotate back with charge -l), and return through
    the inverse maps.
    """
    mp = as_multipartition(mp)
    l = len(mp)
    charges = as_charges(charges, l)
    e = check_modulus(e)
    if not 0 <= i < e:
        raise ValueError("residue out of range")
    mp_e, s_e = tau_e(*tau_l_inverse(mp, charges, e), e)
    if i >= 1:
        mp_e, s_e = _pair_components(mp_e, s_e, i)
    else:
        rot = (mp_e[-1],) + mp_e[:-1]
        rot_s = (s_e[-1] + l,) + s_e[:-1]
        rot, rot_s = _pair_components(rot, rot_s, 1)
        mp_e = rot[1:] + (rot[0],)
        s_e = rot_s[1:] + (rot_s[0] - l,)
    p, m = tau_e_inverse(mp_e, s_e)
    new_mp, new_charges = tau_l(p, m, e, l)
    assert new_charges == charges
    return new_mp
