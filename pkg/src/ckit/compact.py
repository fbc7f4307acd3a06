"""Truncated prefixes of the compact set K of fractions m/3^k.

Every m with 3 not dividing m contributes the points ``m / 3^(kappa(m) + t)``,
``t >= 0``.  With ``||m||_st = 3 l + 2 - u`` the top point ``m/3^l`` lies in
layer ``T_u`` and the point ``m/3^(l+t)`` has Cantor-Bendixson rank ``u + 3t``
in K.  A prefix keeps all such points above a cutoff whose numerator is at
most the stable-table limit ``N // 3**S``; points with larger numerators are
beyond the horizon and simply absent.

Ordinal labels are assigned by walking the prefix from the top: the next point
of rank ``v`` gets the least position above the previous one whose lowest
Cantor-normal-form exponent is ``v``.  Labels are therefore exact only as far
as no limit point is missing above them.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import FrontierError
from .frac3 import Frac3, _strip3
from .ordinal import Ordinal, next_with_rank, tu_index
from .stability import DEFAULT_SETTLE_WINDOW, StableTable


@dataclass(frozen=True)
class TuElement:
    frac: Frac3
    u: int
    settled: bool


@dataclass
class KPrefix:
    cutoff: Frac3
    labels: list[Ordinal]
    fracs: list[Frac3]
    ranks: list[int]
    settled: list[bool]
    layer: int = 0
    completeness_horizon: int = 0  # largest numerator covered
    table_bound: int = 0
    stable: StableTable | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.fracs)

    @property
    def elements(self) -> list[tuple[Ordinal, Frac3]]:
        return list(zip(self.labels, self.fracs))

    def at(self, label: Ordinal) -> Frac3:
        try:
            return self.fracs[self._by_label()[label]]
        except KeyError:
            raise FrontierError(f"position {label} is not inside this prefix") from None

    def index_of_label(self, label: Ordinal) -> int:
        try:
            return self._by_label()[label]
        except KeyError:
            raise FrontierError(f"position {label} is not inside this prefix") from None

    def _by_label(self) -> dict[Ordinal, int]:
        cache = self.__dict__.get("_label_index")
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            self.__dict__["_label_index"] = cache
        return cache

    def to_record(self) -> dict:
        return {
            "cutoff": str(self.cutoff),
            "layer": self.layer,
            "completeness_horizon": self.completeness_horizon,
            "table_bound": self.table_bound,
            "elements": [
                {"label": str(lab), "frac": str(f), "rank": r, "settled": s}
                for lab, f, r, s in zip(self.labels, self.fracs, self.ranks, self.settled)
            ],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "KPrefix":
        els = rec["elements"]
        return cls(
            cutoff=Frac3.parse(rec["cutoff"]),
            labels=[Ordinal.parse(e["label"]) for e in els],
            fracs=[Frac3.parse(e["frac"]) for e in els],
            ranks=[int(e["rank"]) for e in els],
            settled=[bool(e["settled"]) for e in els],
            layer=int(rec["layer"]),
            completeness_horizon=int(rec["completeness_horizon"]),
            table_bound=int(rec["table_bound"]),
        )


def _stable_for(source, settle_window: int) -> StableTable:
    if isinstance(source, StableTable):
        return source
    return StableTable.of(source, settle_window)


def _above(m: np.ndarray, k: np.ndarray, cutoff: Frac3) -> np.ndarray:
    """Exact test ``m / 3^k > cutoff`` for arrays (float screen, exact near ties)."""
    if cutoff.is_zero:
        return np.ones(len(m), dtype=bool)
    approx = m / np.power(3.0, k)
    c = float(cutoff)
    out = approx > c
    close = np.flatnonzero(np.abs(approx - c) <= 1e-9 * c)
    for i in close:
        out[i] = int(m[i]) * 3 ** cutoff.k > cutoff.m * 3 ** int(k[i])
    return out


def _sort_desc(m: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Permutation putting ``m / 3^k`` in decreasing order, exactly."""
    if len(m) == 0:
        return np.arange(0)
    kmax = int(k.max())
    # values are <= 2 for points of K; keys m * 3^(kmax-k) stay below 2 * 3^kmax
    if kmax <= 38 and float(m.max()) * 3.0 ** kmax < 9e18:
        key = m * np.power(np.int64(3), (kmax - k).astype(np.int64))
        return np.argsort(-key, kind="stable")
    keys = [int(a) * 3 ** (kmax - int(b)) for a, b in zip(m, k)]
    return np.array(sorted(range(len(keys)), key=lambda i: -keys[i]), dtype=np.int64)


def _assign_labels(ranks: list[int]) -> list[Ordinal]:
    labels = []
    prev = None
    for r in ranks:
        prev = next_with_rank(prev, r)
        labels.append(prev)
    return labels


def enumerate_tu(source, u: int, cutoff: Frac3,
                 settle_window: int = DEFAULT_SETTLE_WINDOW) -> list[TuElement]:
    """Points of ``T_u`` above ``cutoff`` within the horizon, in the reverse order."""
    if u not in (0, 1, 2):
        raise ValueError(f"layer must be 0, 1 or 2, got {u}")
    if cutoff.is_zero:
        raise ValueError("cutoff must be positive")
    st = _stable_for(source, settle_window)
    m = np.arange(1, st.limit + 1, dtype=np.int64)
    keep = (m % 3 != 0) & (st.u[1:] == u)
    m = m[keep]
    k = st.kappa[1:][keep].astype(np.int64)
    sel = _above(m, k, cutoff)
    m, k = m[sel], k[sel]
    if len(m) == 0:
        warnings.warn(f"no T_{u} points above {cutoff} within numerator horizon {st.limit}")
    order = _sort_desc(m, k)
    return [TuElement(Frac3(int(m[i]), int(k[i])), u, bool(st.settled[m[i]])) for i in order]


def build_k_prefix(source, cutoff: Frac3,
                   settle_window: int = DEFAULT_SETTLE_WINDOW) -> KPrefix:
    """All points of K above ``cutoff`` within the horizon, labelled by position."""
    if cutoff.is_zero:
        raise ValueError("cutoff must be positive")
    st = _stable_for(source, settle_window)
    base = np.arange(1, st.limit + 1, dtype=np.int64)
    base = base[base % 3 != 0]
    kap = st.kappa[base].astype(np.int64)
    lay = st.u[base].astype(np.int64)
    ms, ks, rs = [], [], []
    t = 0
    alive = np.ones(len(base), dtype=bool)
    while alive.any():
        idx = np.flatnonzero(alive)
        k = kap[idx] + t
        ok = _above(base[idx], k, cutoff)
        alive[idx[~ok]] = False
        idx = idx[ok]
        ms.append(base[idx])
        ks.append(kap[idx] + t)
        rs.append(lay[idx] + 3 * t)
        t += 1
    m = np.concatenate(ms) if ms else np.zeros(0, np.int64)
    k = np.concatenate(ks) if ks else np.zeros(0, np.int64)
    r = np.concatenate(rs) if rs else np.zeros(0, np.int64)
    if len(m) == 0:
        warnings.warn(f"no points above {cutoff} within numerator horizon {st.limit}")
    order = _sort_desc(m, k)
    m, k, r = m[order], k[order], r[order]
    ranks = r.tolist()
    return KPrefix(
        cutoff=cutoff,
        labels=_assign_labels(ranks),
        fracs=[Frac3(a, b) for a, b in zip(m.tolist(), k.tolist())],
        ranks=ranks,
        settled=st.settled[m].tolist(),
        layer=0,
        completeness_horizon=st.limit,
        table_bound=st.table.max_n,
        stable=st,
    )


def derived_prefix(p: KPrefix) -> KPrefix:
    """Keep the limit points (positive rank) and relabel; the layer goes up by one."""
    keep = [i for i, r in enumerate(p.ranks) if r >= 1]
    ranks = [p.ranks[i] - 1 for i in keep]
    return KPrefix(
        cutoff=p.cutoff,
        labels=_assign_labels(ranks),
        fracs=[p.fracs[i] for i in keep],
        ranks=ranks,
        settled=[p.settled[i] for i in keep],
        layer=p.layer + 1,
        completeness_horizon=p.completeness_horizon,
        table_bound=p.table_bound,
        stable=p.stable,
    )


@dataclass
class SelfSimilarityReport:
    compared_above: Frac3
    compared: int
    only_in_k: list[Frac3] = field(default_factory=list)
    only_in_scaled: list[Frac3] = field(default_factory=list)
    label_mismatches: list[tuple[Frac3, Ordinal, Ordinal]] = field(default_factory=list)
    t3_mismatches: list[Frac3] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.only_in_k or self.only_in_scaled
                    or self.label_mismatches or self.t3_mismatches)


def check_self_similarity(p: KPrefix) -> SelfSimilarityReport:
    """Compare ``3 * K'''`` with K on the values both prefixes cover."""
    d3 = derived_prefix(derived_prefix(derived_prefix(p)))
    floor = p.cutoff.scale3(1)
    scaled = {f.scale3(1): lab for lab, f in zip(d3.labels, d3.fracs)}
    ours = {f: lab for lab, f in zip(p.labels, p.fracs) if f > floor}
    rep = SelfSimilarityReport(compared_above=floor, compared=len(ours))
    rep.only_in_k = sorted(set(ours) - set(scaled), reverse=True)
    rep.only_in_scaled = sorted(set(scaled) - set(ours), reverse=True)
    for f in set(ours) & set(scaled):
        if ours[f] != scaled[f]:
            rep.label_mismatches.append((f, ours[f], scaled[f]))
    # T_3 = T_0 / 3 on the overlap
    t0 = {f for f, r in zip(p.fracs, p.ranks) if r == 0 and f > floor}
    t3 = {f.scale3(1) for f, r in zip(p.fracs, p.ranks) if r == 3}
    rep.t3_mismatches = sorted(t0 ^ t3, reverse=True)
    return rep


# -- sections and families ----------------------------------------------------

@dataclass(frozen=True)
class FamilyGen:
    a: int
    b: int
    v: int
    n: int
    k: int
    epsilon: int
    settled: bool = True

    @property
    def offset(self) -> int:
        return self.b * 3 ** self.v

    @property
    def exponent_shift(self) -> int:
        return self.k + self.epsilon

    @property
    def first_index(self) -> int:
        """Smallest j allowed; ``a = 1`` needs ``r >= 1``."""
        return self.v + (1 if self.a == 1 else 0)

    def member(self, j: int) -> Frac3:
        """``(n 3^j + b 3^v) / 3^(j + k + eps)``."""
        return Frac3(self.n * 3 ** j + self.offset, j + self.exponent_shift)


def emit_family_tail(gen: FamilyGen) -> str:
    head = "3^k" if gen.n == 1 else f"{gen.n}*3^k"
    s = gen.exponent_shift
    den = "3^k" if s == 0 else f"3^(k+{s})"
    return f"({head}+{gen.offset})/{den}"


def family_generators(source, limit: Frac3, u: int,
                      settle_window: int = DEFAULT_SETTLE_WINDOW) -> list[FamilyGen]:
    """Generators ``n = a b`` with ``||n||_st = ||a||_st + ||b||_st`` for the section
    converging to ``limit = n / 3^k``, sorted by decreasing offset ``b 3^v``."""
    if limit.is_zero:
        raise ValueError("limit must be positive")
    st = _stable_for(source, settle_window)
    n = limit.m
    eps = 1 if u == 2 else 0
    k = limit.k - eps
    if k < 0:
        raise ValueError(f"limit {limit} cannot close a T_2 section")
    sn = st.get(n)
    gens = []
    for a in range(1, n + 1):
        if n % a:
            continue
        b = n // a
        sa, sb = st.get(a), st.get(b)
        if sn.value != sa.value + sb.value:
            continue
        v = 0
        while b * 3 ** (v + 1) <= n:
            v += 1
        gens.append(FamilyGen(a, b, v, n, k, eps, sn.settled and sa.settled and sb.settled))
    gens.sort(key=lambda g: -g.offset)
    return gens


def match_family(x: Frac3, limit: Frac3, gens: list[FamilyGen]) -> tuple[int, int, int] | None:
    """If ``x = b (a 3^r + 1) / 3^(r + k)`` for one of ``gens`` (with ``a^2 + r^2 > 1``),
    return ``(a, b, r)``."""
    num = x.m * 3 ** limit.k - limit.m * 3 ** x.k
    if num <= 0:
        return None
    p, alpha = _strip3(num)
    r = x.k - alpha
    for g in gens:
        if g.b == p and r >= 0 and g.a ** 2 + r ** 2 > 1:
            return (g.a, g.b, r)
    return None


@dataclass
class Section:
    beta: Ordinal
    u: int
    limit: Frac3
    upper: Frac3 | None
    members: list[TuElement]
    families: list[FamilyGen]
    sporadic: list[bool] = field(default_factory=list)
    origins: list[tuple[int, int, int] | None] = field(default_factory=list)
    family_outside: list[Frac3] = field(default_factory=list)  # A_beta points not among members
    completeness_horizon: int = 0

    @property
    def sporadics(self) -> list[Frac3]:
        return [e.frac for e, s in zip(self.members, self.sporadic) if s]

    @property
    def family_inside(self) -> bool:
        """Whether every family point within the horizon is a member."""
        return not self.family_outside

    def to_record(self) -> dict:
        return {
            "beta": str(self.beta),
            "u": self.u,
            "limit": str(self.limit),
            "upper": None if self.upper is None else str(self.upper),
            "members": [
                {"frac": str(e.frac), "sporadic": s, "settled": e.settled,
                 "origin": None if o is None else {"a": o[0], "b": o[1], "r": o[2]}}
                for e, s, o in zip(self.members, self.sporadic, self.origins)
            ],
            "families": [
                {"a": g.a, "b": g.b, "v": g.v, "offset": g.offset, "tail": emit_family_tail(g)}
                for g in self.families
            ],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Section":
        u = int(rec["u"])
        limit = Frac3.parse(rec["limit"])
        eps = 1 if u == 2 else 0
        fams = []
        for f in rec["families"]:
            a, b = int(f["a"]), int(f["b"])
            fams.append(FamilyGen(a, b, int(f["v"]), limit.m, limit.k - eps, eps))
        members = [TuElement(Frac3.parse(m["frac"]), u, bool(m["settled"])) for m in rec["members"]]
        return cls(
            beta=Ordinal.parse(rec["beta"]),
            u=u,
            limit=limit,
            upper=None if rec.get("upper") is None else Frac3.parse(rec["upper"]),
            members=members,
            families=fams,
            sporadic=[bool(m["sporadic"]) for m in rec["members"]],
            origins=[None if m["origin"] is None else
                     (m["origin"]["a"], m["origin"]["b"], m["origin"]["r"]) for m in rec["members"]],
        )


def classify_sporadics(section: Section) -> Section:
    """Fill sporadic flags and family origins; also list family points inside the
    interval (within the horizon) that are missing from the members."""
    section.origins = [match_family(e.frac, section.limit, section.families)
                       for e in section.members]
    section.sporadic = [o is None for o in section.origins]
    horizon = section.completeness_horizon
    present = {e.frac for e in section.members}
    outside = []
    if horizon:
        for g in section.families:
            r = 1 if g.a == 1 else 0
            while True:
                x = Frac3(g.b * (g.a * 3 ** r + 1), r + g.exponent_shift)
                if r >= 1 and x.m > horizon:
                    break
                if (section.upper is None or x < section.upper) and x.m <= horizon \
                        and x not in present:
                    outside.append(x)
                r += 1
    section.family_outside = sorted(set(outside), reverse=True)
    return section


def _beta_of(label: Ordinal, rank: int) -> Ordinal:
    """Inverse of ``tu_index(rank, beta)`` for rank >= 1: ``label = w^rank (beta + 1)``."""
    c = list(label.coeffs[rank:])
    c[0] -= 1
    return Ordinal(tuple(c))


def _section_from_limit(p: KPrefix, i_limit: int, u: int) -> Section:
    limit = p.fracs[i_limit]
    beta = _beta_of(p.labels[i_limit], u + 1)
    upper = None
    for j in range(i_limit - 1, -1, -1):
        if p.ranks[j] >= u + 1:
            upper = p.fracs[j]
            break
    lo = 0 if upper is None else p.fracs.index(upper) + 1
    members = [TuElement(p.fracs[j], u, p.settled[j])
               for j in range(lo, i_limit) if p.ranks[j] == u]
    sec = Section(beta=beta, u=u, limit=limit, upper=upper, members=members,
                  families=family_generators(p.stable, limit, u) if p.stable else [],
                  completeness_horizon=p.completeness_horizon)
    return classify_sporadics(sec)


def _require_k(p: KPrefix) -> None:
    if p.layer != 0:
        raise ValueError("sections are computed on a prefix of K itself (layer 0)")


def section_of(p: KPrefix, beta: Ordinal, u: int) -> Section:
    """The section ``I_beta^u`` of ``T_u``: the points converging to ``T_{u+1}[beta]``."""
    _require_k(p)
    if u not in (0, 1, 2):
        raise ValueError(f"layer must be 0, 1 or 2, got {u}")
    i = p.index_of_label(tu_index(u + 1, beta))
    return _section_from_limit(p, i, u)


def section_at_limit(p: KPrefix, limit: Frac3, u: int) -> Section:
    """The section of ``T_u`` whose members converge to the point ``limit``."""
    _require_k(p)
    try:
        i = p.fracs.index(limit)
    except ValueError:
        raise FrontierError(f"{limit} is not a point of this prefix") from None
    if p.ranks[i] != u + 1:
        raise ValueError(f"{limit} has rank {p.ranks[i]}, not a limit of T_{u}")
    return _section_from_limit(p, i, u)


def sections(p: KPrefix, u: int, count: int | None = None) -> list[Section]:
    """Successive sections of ``T_u`` in the order of their limits."""
    _require_k(p)
    out = []
    for i, r in enumerate(p.ranks):
        if r == u + 1:
            out.append(_section_from_limit(p, i, u))
            if count is not None and len(out) >= count:
                break
    return out


def attribute_origins(section: Section, source, limits: list[Frac3],
                      settle_window: int = DEFAULT_SETTLE_WINDOW) -> dict[Frac3, tuple]:
    """For each sporadic, the first of ``limits`` whose family produces it.

    Returns ``{sporadic: (limit, a, b, r)}``; sporadics no family explains are absent.
    """
    gens = {lim: family_generators(source, lim, section.u, settle_window) for lim in limits}
    out = {}
    for x in section.sporadics:
        for lim in limits:
            hit = match_family(x, lim, gens[lim])
            if hit is not None:
                out[x] = (lim, *hit)
                break
    return out


# -- limit relations ----------------------------------------------------------

@dataclass
class LimitCheck:
    alpha: Ordinal
    u: int
    limit: Frac3
    members: int
    decreasing: bool
    shrinking: bool
    final_rel_distance: float
    wrap_ok: bool = True

    def ok(self, rel_tol: float) -> bool:
        return self.decreasing and self.shrinking and self.wrap_ok \
            and self.final_rel_distance <= rel_tol


@dataclass
class LimitReport:
    depth: int
    rel_tol: float
    checks: list[LimitCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok(self.rel_tol) for c in self.checks)


def check_limit_relations(p: KPrefix, alphas, depth: int = 15, rel_tol: float = 1e-3,
                          layers=(0, 1, 2)) -> LimitReport:
    """``T_u[w alpha + n]`` decreases to ``T_{u+1}[alpha]`` over the last ``depth`` members;
    for ``u = 2`` the limit must also equal ``T_0[alpha] / 3``."""
    rep = LimitReport(depth, rel_tol)
    for alpha in alphas:
        for u in layers:
            sec = section_of(p, alpha, u)
            vals = [e.frac for e in sec.members]
            if len(vals) < depth:
                raise FrontierError(
                    f"section alpha={alpha}, u={u} has {len(vals)} members, need {depth}")
            tail = vals[-depth:]
            lim = sec.limit.to_fraction()
            decreasing = all(a > b for a, b in zip(tail, tail[1:])) and tail[-1] > sec.limit
            gaps = [f.to_fraction() - lim for f in tail]
            shrinking = all(a > b for a, b in zip(gaps, gaps[1:]))
            rel = float(gaps[-1] / lim)
            wrap_ok = True
            if u == 2:
                wrap_ok = p.at(tu_index(0, alpha)).scale3(-1) == sec.limit
            rep.checks.append(LimitCheck(alpha, u, sec.limit, len(vals), decreasing,
                                         shrinking, rel, wrap_ok))
    return rep
