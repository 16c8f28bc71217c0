#!/usr/bin/env python3
"""Deterministically build the bundled AUCS-statistics workplace fixture.

The AUCS workplace dataset (61 employees of a university CS department,
five relation types: work, leisure, coauthor, lunch, facebook) is widely
used but not redistributable from here, so the test fixture is a
deterministic stand-in grown by this script.  It reproduces the published
summary statistics exactly -- per-layer edge counts, connected-component
counts and average vertex degrees -- together with the qualitative
features the test-suite relies on:

* U4 is the highest-degree hub, active on work, lunch and facebook and
  absent from leisure and coauthor;
* U141, U68, U48 and U92 form a lunch-layer clique whose members reach
  each other only at lunch, are all work-connected to U4, and survive
  exclusive-relevance local merging at threshold 0.3;
* locally merged structure stays more transitive than the node-sampling
  null model across the default threshold grids, and the exclusive
  relevance filter runs the network dry (undefined transitivity) before
  threshold 0.6.

The construction mimics how such an office actually wires up: work and
lunch are team near-cliques with heavy overlap, lunch adds cross-team
"mixer tables", leisure is friendship groups plus a tightly-knit trio,
facebook has a dense core, and a handful of people keep one odd stray
tie on a layer that barely matters to them.  Those strays are what the
relevance filters shed first, which is why filtered structure beats the
node-sampling null model the way the real data does.

Run with --check to re-verify an existing fixture file.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from multiviz.model import MultiplexNetwork, component_count, parse_multinet, write_multinet
from multiviz.metrics import degree, metric_value
from multiviz.simplify import MergeSpec, local_merge, sweep

LAYERS = ("work", "leisure", "coauthor", "lunch", "facebook")
TARGETS = {  # edges, incident actors, connected components
    "work": (194, 60, 2),
    "leisure": (88, 47, 1),
    "coauthor": (21, 25, 8),
    "lunch": (193, 60, 1),
    "facebook": (124, 32, 1),
}
AVG_DEGREES = {"work": 6.47, "leisure": 3.74, "coauthor": 1.68, "lunch": 6.43, "facebook": 7.75}

U4 = "U4"
CLIQUE = ("U141", "U68", "U48", "U92")
TEAM_SIZES = (9, 9, 8, 8, 7, 6)

WORK_DENSITY = 0.82
ISLAND_DENSITY = 0.8
LUNCH_DUP = 0.66
LEISURE_DENSITY = 0.75
FB_CORE_DENSITY = 0.55


def pkey(a, b):
    return (a, b) if a < b else (b, a)


class LayerBuilder:
    """Edge set under construction with membership and protection rules."""

    def __init__(self, name, members, rng):
        self.name = name
        self.members = set(members)
        self.rng = rng
        self.pairs = set()
        self.protected_pairs = set()
        self.frozen_actors = set()

    def add(self, a, b, protect=False):
        if a == b:
            raise ValueError(f"self loop {a}")
        if a not in self.members or b not in self.members:
            raise ValueError(f"{self.name}: {a} or {b} not a member")
        p = pkey(a, b)
        self.pairs.add(p)
        if protect:
            self.protected_pairs.add(p)

    def degree_of(self, a):
        return sum(1 for p in self.pairs if a in p)

    def components(self):
        return component_count(self.members, self.pairs)

    def fill_to(self, target, communities):
        """Add triangle-closing (preferred) or random in-community pairs
        until the edge count reaches the target."""
        adj = {m: set() for m in self.members}
        for a, b in self.pairs:
            adj[a].add(b)
            adj[b].add(a)
        guard = 0
        while len(self.pairs) < target:
            guard += 1
            if guard > 40000:
                raise RuntimeError(f"{self.name}: cannot reach {target} edges")
            comm = communities[self.rng.integers(len(communities))]
            comm = [c for c in comm if c not in self.frozen_actors and c in self.members]
            if len(comm) < 2:
                continue
            v = comm[self.rng.integers(len(comm))]
            nbrs = [n for n in sorted(adj[v]) if n in comm]
            added = False
            if len(nbrs) >= 2:
                i, j = self.rng.permutation(len(nbrs))[:2]
                a, b = nbrs[int(i)], nbrs[int(j)]
                if a != b and pkey(a, b) not in self.pairs:
                    self.add(a, b)
                    adj[a].add(b)
                    adj[b].add(a)
                    added = True
            if not added:
                i, j = self.rng.permutation(len(comm))[:2]
                a, b = comm[int(i)], comm[int(j)]
                if a != b and pkey(a, b) not in self.pairs:
                    self.add(a, b)
                    adj[a].add(b)
                    adj[b].add(a)

    def trim_to(self, target):
        """Remove unprotected edges while preserving membership coverage
        and the component structure."""
        guard = 0
        while len(self.pairs) > target:
            guard += 1
            if guard > 40000:
                raise RuntimeError(f"{self.name}: cannot trim to {target} edges")
            removable = sorted(
                p for p in self.pairs
                if p not in self.protected_pairs
                and not (p[0] in self.frozen_actors or p[1] in self.frozen_actors)
            )
            if not removable:
                raise RuntimeError(f"{self.name}: nothing removable")
            p = removable[int(self.rng.integers(len(removable)))]
            if self.degree_of(p[0]) <= 1 or self.degree_of(p[1]) <= 1:
                continue
            comps = self.components()
            self.pairs.discard(p)
            if self.components() != comps:
                self.pairs.add(p)

    def connect(self, groups):
        """Bridge the given groups into one component chain by linking
        their first usable members."""
        reps = []
        for g in groups:
            cand = [m for m in g if m not in self.frozen_actors and m in self.members]
            if cand:
                reps.append(cand[0])
        for a, b in zip(reps, reps[1:]):
            if pkey(a, b) not in self.pairs:
                self.add(a, b)


def build_roster(rng):
    pool_numbers = [n for n in range(1, 143) if f"U{n}" not in (U4, *CLIQUE, "U91", "U79")]
    picks = rng.permutation(len(pool_numbers))
    names = [f"U{pool_numbers[int(i)]}" for i in picks[:54]]
    pod = names[:5]
    admin = names[5:9]
    team_pool = names[9:]  # 45 names
    teams = []
    cursor = 0
    for ti, size in enumerate(TEAM_SIZES):
        need = size - (1 if ti < 2 else 0)
        members = team_pool[cursor:cursor + need]
        cursor += need
        if ti == 0:
            members = ["U91", *members]
        elif ti == 1:
            members = ["U79", *members]
        teams.append(members)
    assert cursor == len(team_pool)
    return pod, admin, teams


def sample(rng, seq, k):
    seq = list(seq)
    order = rng.permutation(len(seq))
    return [seq[int(i)] for i in order[:k]]


def build_network(seed):
    rng = np.random.default_rng(seed)
    pod, admin, teams = build_roster(rng)
    pod_lead = pod[0]
    leads = [t[0] for t in teams]
    everyone = [U4, *CLIQUE, *pod, *admin, *itertools.chain(*teams)]
    assert len(everyone) == len(set(everyone)) == 61

    no_work = admin[3]
    no_lunch = teams[5][2]
    clique_work_partner = dict(zip(CLIQUE, leads[:4]))
    clique_fb_partner = dict(zip(CLIQUE, [teams[0][1], teams[1][1], teams[2][1], teams[3][1]]))
    clique_leisure_partner = dict(zip(CLIQUE, [teams[0][2], teams[1][2], teams[2][2], teams[3][2]]))

    # the leisure trio: three T5 friends whose only leisure ties are to each
    # other, pinned so their exclusive relevance on leisure is exactly 0.5
    trio = teams[4][-3:]
    trio_lead = teams[4][0]
    trio_mate = {trio[0]: teams[4][1], trio[1]: teams[4][2], trio[2]: teams[4][3]}
    frozen = set(CLIQUE) | set(pod) | set(trio)

    protected_people = (set(clique_fb_partner.values()) | set(clique_leisure_partner.values())
                        | set(leads) | frozen | {no_lunch, no_work})

    work_members = set(everyone) - {no_work}
    lunch_members = set(everyone) - {no_lunch}

    coauthor_members = teams[0][:9] + teams[1][:7] + teams[2][:5] + teams[3][:4]
    assert len(coauthor_members) == 25
    coauthor_groups = [
        teams[0][:7], teams[0][7:9],
        teams[1][:4], teams[1][4:7],
        teams[2][:3], teams[2][3:5],
        teams[3][:2], teams[3][2:4],
    ]

    # ---- work ------------------------------------------------------------
    work = LayerBuilder("work", work_members, rng)
    work.frozen_actors = frozen | {U4}
    for a, b in itertools.combinations(pod, 2):
        work.add(a, b, protect=True)
    for c in CLIQUE:
        work.add(c, U4, protect=True)
        work.add(c, clique_work_partner[c], protect=True)
    work.add(pod_lead, U4, protect=True)
    for t in trio:
        work.add(t, trio_lead, protect=True)
        work.add(t, trio_mate[t], protect=True)
    for ti, team in enumerate(teams):
        density = WORK_DENSITY if ti < 5 else ISLAND_DENSITY  # team 6 is the island
        for a, b in itertools.combinations(team, 2):
            if no_work in (a, b) or a in trio or b in trio:
                continue
            if rng.random() < density:
                work.add(a, b)
        for m in team[1:]:
            if m != no_work and m not in trio and pkey(team[0], m) not in work.pairs:
                work.add(team[0], m)
    admins_in = [a for a in admin if a != no_work]
    for a, b in itertools.combinations(admins_in, 2):
        work.add(a, b)
    work.add(admins_in[0], U4)
    for lead in leads[:5]:
        work.add(lead, U4)
    main_members = [m for t in teams[:5] for m in t[1:]
                    if m != no_work and m not in trio]
    for m in sample(rng, main_members, 16):
        if pkey(U4, m) not in work.pairs:
            work.add(U4, m)
    for _ in range(4):  # a few cross-team collaborations, never the island
        ta, tb = rng.permutation(5)[:2]
        a = teams[int(ta)][int(rng.integers(len(teams[int(ta)])))]
        b = teams[int(tb)][int(rng.integers(len(teams[int(tb)])))]
        if (a != b and no_work not in (a, b) and a not in frozen and b not in frozen
                and pkey(a, b) not in work.pairs):
            work.add(a, b)

    # coauthor relations always sit on top of work relations
    coauthor = LayerBuilder("coauthor", coauthor_members, rng)
    for group, extra in zip(coauthor_groups, (3, 0, 1, 0, 0, 0, 0, 0)):
        for a, b in zip(group, group[1:]):
            coauthor.add(a, b, protect=True)
        closures = 0
        for a, b in itertools.combinations(group, 2):
            if closures >= extra:
                break
            if pkey(a, b) not in coauthor.pairs:
                coauthor.add(a, b, protect=True)
                closures += 1
    for a, b in coauthor.pairs:
        if pkey(a, b) not in work.pairs and no_work not in (a, b):
            work.add(a, b)
    assert len(coauthor.pairs) == 21
    assert coauthor.components() == 8

    work.connect([teams[0], teams[1], teams[2], teams[3], teams[4], admins_in])
    work_communities = teams[:5] + [admins_in]
    if len(work.pairs) < 194:
        work.fill_to(194, work_communities)
    work.trim_to(194)
    assert work.components() == 2, f"work components {work.components()}"

    def distinct_neighbors(builders, m):
        out = set()
        for b in builders:
            for p in b.pairs:
                if m in p:
                    out.add(p[0] if p[1] == m else p[1])
        return out

    # lunch strays: heavy offline networkers whose single lunch tie is one
    # odd cross-team edge that low thresholds shed immediately
    stray_candidates = sorted(
        (m for m in teams[0] + teams[1] + teams[2] if m not in protected_people),
        key=lambda m: (-work.degree_of(m), m),
    )
    lunch_strays = stray_candidates[:4]

    # ---- lunch -----------------------------------------------------------
    lunch = LayerBuilder("lunch", lunch_members, rng)
    lunch.frozen_actors = set(pod)
    for a, b in itertools.combinations(pod, 2):
        lunch.add(a, b, protect=True)
    lunch.add(pod_lead, U4, protect=True)
    for a, b in itertools.combinations(CLIQUE, 2):
        lunch.add(a, b, protect=True)
    for c in CLIQUE:
        lunch.add(c, U4, protect=True)
    for t in trio:  # the trio shares its team lead's table and nothing else
        lunch.add(t, trio_lead, protect=True)
    lunch.frozen_actors = frozen | set(lunch_strays) | {U4}
    # team tables duplicate a big chunk of the work relations
    for team in teams:
        for a, b in itertools.combinations(team, 2):
            if no_lunch in (a, b) or a in frozen or b in frozen:
                continue
            if a in lunch_strays or b in lunch_strays:
                continue
            if pkey(a, b) in work.pairs and rng.random() < LUNCH_DUP:
                lunch.add(a, b)
    for a, b in itertools.combinations(admin, 2):
        lunch.add(a, b)
    lunch.add(admin[0], U4)
    # cross-team mixer tables: small lunch-only cliques covering most people
    mixer_pool = [m for t in teams for m in t
                  if m != no_lunch and m not in frozen and m not in lunch_strays]
    mixer_order = sample(rng, mixer_pool, len(mixer_pool))
    mixers = []
    cursor = 0
    for size in (5, 5, 5, 4, 4, 4, 4, 4):
        table = mixer_order[cursor:cursor + size]
        cursor += size
        if len(table) < 2:
            break
        mixers.append(table)
        for a, b in itertools.combinations(table, 2):
            if pkey(a, b) not in lunch.pairs:
                lunch.add(a, b)
    for lead in leads[:4]:
        if pkey(U4, lead) not in lunch.pairs:
            lunch.add(U4, lead)
    u4_fresh_lunch = [m for m in mixer_pool if pkey(U4, m) not in work.pairs]
    for m in sample(rng, u4_fresh_lunch, 6):
        if pkey(U4, m) not in lunch.pairs:
            lunch.add(U4, m)
    for m in lunch_strays:  # one odd cross-team lunch tie, their only one
        team_of = next(t for t in teams if m in t)
        fresh = [x for x in mixer_pool
                 if x not in team_of and pkey(m, x) not in work.pairs]
        partner = fresh[int(rng.integers(len(fresh)))]
        lunch.add(m, partner, protect=True)
    lunch.connect([*teams, admin, [U4]])
    lunch_communities = teams + mixers + [admin]
    if len(lunch.pairs) < 193:
        lunch.fill_to(193, lunch_communities)
    lunch.trim_to(193)
    assert lunch.components() == 1, f"lunch components {lunch.components()}"

    # ---- leisure ---------------------------------------------------------
    leisure_members = (set(CLIQUE) | set(clique_leisure_partner.values())
                       | {"U91", "U79", trio_lead} | set(trio) | set(lunch_strays))
    leisure_pool = [m for m in itertools.chain(*teams, admin) if m not in leisure_members]
    for m in sample(rng, leisure_pool, 47 - len(leisure_members)):
        leisure_members.add(m)
    assert len(leisure_members) == 47

    leisure = LayerBuilder("leisure", leisure_members, rng)
    leisure.frozen_actors = frozen
    for c in CLIQUE:
        leisure.add(c, clique_leisure_partner[c], protect=True)
    for a, b in itertools.combinations(trio, 2):
        leisure.add(a, b, protect=True)
    # anchor the trio to the rest through someone they already know offline,
    # so their neighborhoods (and metric values) stay pinned
    leisure.add(trio[0], trio_lead, protect=True)
    pool = sorted(leisure_members - frozen)
    pinned = set(clique_leisure_partner.values()) | {trio_lead} | set(lunch_strays)
    ranked = sorted(pool, key=lambda m: (-len(distinct_neighbors((work, lunch), m)), m))
    leisure_strays = [m for m in ranked
                      if len(distinct_neighbors((work, lunch), m)) >= 10
                      and m not in pinned][:6]
    group_pool = [m for m in sample(rng, pool, len(pool)) if m not in leisure_strays]
    groups = []
    cursor = 0
    for size in (6, 6, 5, 5, 5, 4):
        group = group_pool[cursor:cursor + size]
        cursor += size
        if len(group) >= 2:
            groups.append(group)
    if cursor < len(group_pool):
        groups[-1] = groups[-1] + group_pool[cursor:]
    for group in groups:
        for a, b in itertools.combinations(group, 2):
            if rng.random() < LEISURE_DENSITY or pkey(a, b) in lunch.pairs:
                leisure.add(a, b)
    leisure.frozen_actors = frozen | set(leisure_strays)
    for m in leisure_strays:  # single odd leisure tie to someone unrelated
        fresh = [x for x in group_pool
                 if x != m and pkey(m, x) not in work.pairs
                 and pkey(m, x) not in lunch.pairs]
        partner = fresh[int(rng.integers(len(fresh)))]
        leisure.add(m, partner, protect=True)
    leisure.connect(groups)
    if len(leisure.pairs) < 88:
        leisure.fill_to(88, groups)
    leisure.trim_to(88)
    for m in sorted(leisure_members):
        if leisure.degree_of(m) == 0:
            host = next(g[0] for g in groups if g[0] != m)
            leisure.add(m, host)
    leisure.trim_to(88)
    assert leisure.components() == 1, f"leisure components {leisure.components()}"

    # ---- facebook --------------------------------------------------------
    fb_members = {U4, *CLIQUE, *clique_fb_partner.values(), "U91", "U79"}
    fb_members |= set(lunch_strays) | set(leisure_strays)
    fb_pool = [m for m in itertools.chain(*teams, admin)
               if m not in fb_members and m not in trio]
    for m in sample(rng, fb_pool, 32 - len(fb_members)):
        fb_members.add(m)
    assert len(fb_members) == 32

    fb = LayerBuilder("facebook", fb_members, rng)
    fb.frozen_actors = frozen | {U4}
    for c in CLIQUE:
        fb.add(c, clique_fb_partner[c], protect=True)
    other_pairs = work.pairs | lunch.pairs | leisure.pairs

    rest = [m for m in sorted(fb_members - frozen) if m != U4]
    forced_heavy = [m for m in rest
                    if m in clique_fb_partner.values() or m in ("U91", "U79")]
    others = sorted((m for m in rest if m not in forced_heavy),
                    key=lambda m: (-len(distinct_neighbors((work, lunch, leisure), m)), m))
    fb_strays = [m for m in others
                 if len(distinct_neighbors((work, lunch, leisure), m)) >= 10][:8]
    non_stray = [m for m in others if m not in fb_strays]
    heavy = forced_heavy + non_stray[:14 - len(forced_heavy)]
    light = non_stray[14 - len(forced_heavy):]
    for a, b in itertools.combinations(heavy, 2):
        p = FB_CORE_DENSITY + 0.25 if pkey(a, b) in other_pairs else FB_CORE_DENSITY
        if rng.random() < p:
            fb.add(a, b)
    for m in light:
        # casual users befriend people they already know offline
        known = [h for h in heavy if pkey(m, h) in other_pairs]
        fresh = [h for h in heavy if h not in known]
        for t in (known + fresh)[:3]:
            if t != m and pkey(m, t) not in fb.pairs:
                fb.add(m, t)
    fb.frozen_actors = frozen | set(fb_strays) | {U4}
    for m in fb_strays:  # heavy offline networkers with one token online tie
        fresh = [h for h in heavy if pkey(m, h) not in other_pairs and h != m]
        fb.add(m, fresh[0] if fresh else heavy[0], protect=True)
    # U4 keeps a token facebook presence: three fresh contacts only
    u4_fresh = [h for h in heavy if pkey(U4, h) not in other_pairs]
    for h in u4_fresh[:3]:
        fb.add(U4, h, protect=True)
    fb.connect([heavy, light, [U4]])
    if len(fb.pairs) < 124:
        fb.fill_to(124, [heavy, [*heavy, *light]])
    fb.trim_to(124)
    for m in sorted(fb_members):
        if fb.degree_of(m) == 0:
            fb.add(m, heavy[0] if heavy[0] != m else heavy[1])
    fb.trim_to(124)
    assert fb.components() == 1, f"facebook components {fb.components()}"

    builders = {
        "work": work, "leisure": leisure, "coauthor": coauthor,
        "lunch": lunch, "facebook": fb,
    }

    # ---- keep U4 the unambiguous hub --------------------------------------
    def aggregate(a):
        return sum(b.degree_of(a) for b in builders.values())

    stray_people = set(lunch_strays) | set(leisure_strays) | set(fb_strays)
    # stray owners and the hub live off carefully pinned neighborhoods;
    # the rebalance below must not touch any edge incident to them
    for b in builders.values():
        b.frozen_actors = b.frozen_actors | stray_people | {U4}
    cap = aggregate(U4) - 3
    guard = 0
    while True:
        guard += 1
        if guard > 2000:
            raise RuntimeError("cannot rebalance aggregate degrees")
        over = [a for a in everyone if a != U4 and aggregate(a) > cap]
        if not over:
            break
        victim = over[0]
        moved = False
        for name in ("facebook", "leisure", "lunch", "work"):
            b = builders[name]
            incident = sorted(
                p for p in b.pairs
                if victim in p and p not in b.protected_pairs
                and not (p[0] in b.frozen_actors or p[1] in b.frozen_actors)
            )
            for p in incident:
                if b.degree_of(p[0]) <= 1 or b.degree_of(p[1]) <= 1:
                    continue
                comps = b.components()
                b.pairs.discard(p)
                if b.components() != comps:
                    b.pairs.add(p)
                    continue
                before = len(b.pairs)
                pool = [m for m in sorted(b.members)
                        if m not in b.frozen_actors and m != victim
                        and b.degree_of(m) > 0 and m != U4
                        and m not in stray_people]
                for _ in range(400):
                    x = pool[int(rng.integers(len(pool)))]
                    y = pool[int(rng.integers(len(pool)))]
                    if x != y and pkey(x, y) not in b.pairs:
                        b.add(x, y)
                        break
                if len(b.pairs) == before:
                    b.pairs.add(p)
                    continue
                moved = True
                break
            if moved:
                break
        if not moved:
            raise RuntimeError(f"cannot lower degree of {victim}")

    net = MultiplexNetwork(
        actors=frozenset(everyone),
        layers=LAYERS,
        edges={name: frozenset(b.pairs) for name, b in builders.items()},
    )

    # stray ties must genuinely fall below the lowest filter threshold
    for strays, layer in ((lunch_strays, "lunch"), (leisure_strays, "leisure"),
                          (fb_strays, "facebook"), ([U4], "facebook")):
        for m in strays:
            if metric_value(net, m, [layer], "relevance") >= 0.095:
                raise RuntimeError(f"stray {m} too relevant on {layer}")
    for t in trio:
        x = metric_value(net, t, ["leisure"], "xrelevance")
        if not 0.5 <= x < 0.6:
            raise RuntimeError(f"trio member {t} xrelevance(leisure) is {x}")
    return net


def verify(net, sweep_seeds=(42, 1, 2, 3, 7, 123), margin=0.01, verbose=False):
    """Check every statistic and behavior the test-suite relies on.
    Returns a list of failure strings (empty = all good)."""
    fails = []
    say = print if verbose else (lambda *a, **k: None)

    from multiviz.model import layer_stats
    stats = layer_stats(net)
    for layer, (edges, incident, comps) in TARGETS.items():
        s = stats[layer]
        got_incident = len(net.incident_actors(layer))
        if s.edge_count != edges:
            fails.append(f"{layer}: {s.edge_count} edges, want {edges}")
        if got_incident != incident:
            fails.append(f"{layer}: {got_incident} incident, want {incident}")
        if s.component_count != comps:
            fails.append(f"{layer}: {s.component_count} components, want {comps}")
        if abs(s.avg_degree - AVG_DEGREES[layer]) > 0.005:
            fails.append(f"{layer}: avg degree {s.avg_degree:.4f}, want {AVG_DEGREES[layer]}")
    if len(net.actors) != 61:
        fails.append(f"{len(net.actors)} actors, want 61")
    for a in sorted(net.actors):
        if all(not any(a in e for e in net.edges[l]) for l in net.layers):
            fails.append(f"{a} is a global isolate")

    # hub properties
    agg = {a: degree(net, a, net.layers) for a in net.actors}
    top = sorted(agg, key=lambda a: (-agg[a], a))
    if top[0] != U4 or agg[top[1]] >= agg[U4]:
        fails.append(f"top degree is {top[0]} ({agg[top[0]]}), next {top[1]} ({agg[top[1]]})")
    say("top-5 aggregate degree:", [(a, agg[a]) for a in top[:5]])
    for layer in ("leisure", "coauthor"):
        if degree(net, U4, [layer]) != 0:
            fails.append(f"U4 has degree on {layer}")

    # the lunch clique and its exclusive-relevance band
    for a, b in itertools.combinations(CLIQUE, 2):
        if pkey(a, b) not in net.edges["lunch"]:
            fails.append(f"missing lunch clique edge {a}-{b}")
        for layer in net.layers:
            if layer != "lunch" and pkey(a, b) in net.edges[layer]:
                fails.append(f"clique pair {a}-{b} duplicated on {layer}")
    for c in CLIQUE:
        if pkey(c, U4) not in net.edges["work"] or pkey(c, U4) not in net.edges["lunch"]:
            fails.append(f"{c} not tied to U4 on work+lunch")
        x = metric_value(net, c, ["lunch"], "xrelevance")
        if not 0.40 <= x < 0.50:
            fails.append(f"xrelevance(lunch) of {c} is {x:.3f}, want [0.40, 0.50)")
    merged = local_merge(net, MergeSpec("xrelevance", 0.3))
    for a, b in itertools.combinations(CLIQUE, 2):
        if pkey(a, b) not in merged.edges["lunch"]:
            fails.append(f"clique edge {a}-{b} lost at xrelevance 0.3")

    # sweep behavior: observed transitivity dominates the null model
    rel_grid = [round(0.1 * i, 10) for i in range(10)]
    xrel_grid = [round(0.1 * i, 10) for i in range(7)]
    for seed in sweep_seeds:
        for kind, grid in (("relevance", rel_grid), ("xrelevance", xrel_grid)):
            r = sweep(net, kind, grid, replicates=10, seed=seed)
            means = r.null_means()
            trace = []
            for t, obs, mean in zip(r.thresholds, r.observed, means):
                if obs is None or mean is None:
                    continue
                trace.append((t, round(obs, 3), round(mean, 3)))
                need = margin if t > 0 else -1e-9
                if obs - mean < need:
                    fails.append(
                        f"seed {seed} {kind} t={t}: observed {obs:.4f} < null {mean:.4f} + {max(need, 0)}"
                    )
            say(f"seed {seed} {kind}: (t, obs, null) {trace}")
            if kind == "xrelevance" and all(o is not None for o in r.observed):
                fails.append(f"seed {seed}: xrelevance sweep never went undefined")

    return fails


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=None, help="builder seed (default: search)")
    ap.add_argument("--search", type=int, default=200, help="max seeds to try")
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests/data/aucs.mpx"))
    ap.add_argument("--check", action="store_true", help="verify an existing fixture")
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    if args.check:
        net = parse_multinet(Path(args.out).read_text()).network
        fails = verify(net, verbose=args.verbose)
        for f in fails:
            print("FAIL:", f)
        print("fixture OK" if not fails else f"{len(fails)} failures")
        return 0 if not fails else 1

    seeds = [args.seed] if args.seed is not None else range(args.search)
    for seed in seeds:
        try:
            net = build_network(seed)
        except (RuntimeError, AssertionError, ValueError) as exc:
            print(f"seed {seed}: build failed ({exc})")
            continue
        fails = verify(net, verbose=args.verbose)
        if fails:
            print(f"seed {seed}: {len(fails)} check failures")
            for f in fails[:4]:
                print("   ", f)
            continue
        text = (
            "-- AUCS-statistics workplace multiplex (61 actors, 5 layers)\n"
            f"-- deterministic stand-in built by scripts/build_aucs_fixture.py --seed {seed}\n"
            + write_multinet(net)
        )
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
        print(f"seed {seed}: fixture written to {args.out}")
        reparsed = parse_multinet(Path(args.out).read_text()).network
        assert reparsed == net, "round trip failed"
        return 0
    print("no seed satisfied all checks", file=sys.stderr)
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
