import numpy as np
import pytest

from cdgraphs import (
    INF,
    BadParameter,
    FamilyDescriptor,
    FamilyKind,
    build_graph,
    cd_at,
    cd_graph,
    curvature_value_at,
    girth,
    is_family_member,
    make_cycle,
    make_path,
    make_petersen,
    make_spider,
    make_star,
    make_star3_ext,
)
from cdgraphs.families import from_shorthand, half_line_surrogate_vertices, line_surrogate_vertices


def degree_sequence(g):
    return sorted((len(a) for a in g.adj), reverse=True)


def relabel(g, rng):
    perm = rng.permutation(g.n)
    return build_graph([(int(perm[u]), int(perm[v])) for u, v in g.edges], mode=g.mode, n=g.n)


class TestGenerators:
    @pytest.mark.parametrize("k", [1, 2, 6])
    def test_path(self, k):
        g = make_path(k)
        assert g.n == k + 1 and len(g.edges) == k
        assert girth(g) == INF

    @pytest.mark.parametrize("n", [3, 4, 5, 12])
    def test_cycle(self, n):
        g = make_cycle(n)
        assert girth(g) == n
        assert all(len(a) == 2 for a in g.adj)

    @pytest.mark.parametrize("n", [3, 5, 6])
    def test_star(self, n):
        g = make_star(n)
        assert g.n == n + 1
        assert len(g.adj[0]) == n

    def test_star3_ext(self):
        assert degree_sequence(make_star3_ext(1)) == [3, 2, 1, 1, 1]
        assert degree_sequence(make_star3_ext(3)) == [3, 2, 2, 2, 1, 1, 1]
        assert girth(make_star3_ext(3)) == INF

    def test_spider_special_cases(self):
        assert is_family_member(make_spider(1, 1, 1)) == FamilyDescriptor(FamilyKind.STAR, (3,))
        assert is_family_member(make_spider(2, 1, 1)) == FamilyDescriptor(FamilyKind.STAR3EXT, (1,))
        assert make_spider(3, 1, 1).n == 6

    def test_petersen(self):
        g = make_petersen()
        assert g.n == 10 and len(g.edges) == 15
        assert girth(g) == 5 and all(len(a) == 3 for a in g.adj)

    @pytest.mark.parametrize(
        "maker, args",
        [
            (make_path, (0,)),
            (make_cycle, (2,)),
            (make_star, (2,)),
            (make_star3_ext, (0,)),
            (make_star3_ext, (4,)),
            (make_spider, (0, 1, 1)),
            (make_path, (2.5,)),
        ],
    )
    def test_bad_parameters(self, maker, args):
        with pytest.raises(BadParameter):
            maker(*args)


def all_descriptors():
    out = [FamilyDescriptor(FamilyKind.PATH, (k,)) for k in range(1, 11)]
    out += [FamilyDescriptor(FamilyKind.CYCLE, (n,)) for n in range(3, 13)]
    out += [FamilyDescriptor(FamilyKind.STAR, (n,)) for n in range(3, 9)]
    out += [FamilyDescriptor(FamilyKind.STAR3EXT, (i,)) for i in (1, 2, 3)]
    out += [FamilyDescriptor(FamilyKind.SPIDER, p) for p in [(3, 1, 1), (3, 2, 1), (4, 4, 2)]]
    return out


class TestRecogniser:
    @pytest.mark.parametrize("desc", all_descriptors(), ids=str)
    def test_round_trip(self, desc):
        g = desc.build()
        assert g.n == desc.n_vertices
        assert is_family_member(g) == desc

    def test_relabelled_star3_2(self, rng):
        for _ in range(10):
            g = relabel(make_star3_ext(2), rng)
            assert is_family_member(g) == FamilyDescriptor(FamilyKind.STAR3EXT, (2,))

    def test_relabelled_everything(self, rng):
        for desc in all_descriptors():
            assert is_family_member(relabel(desc.build(), rng)) == desc

    def test_non_members(self):
        assert is_family_member(make_petersen()) is None
        double_star = build_graph([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        assert is_family_member(double_star) is None
        four_legs = build_graph([(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
        assert is_family_member(four_legs) is None
        theta = build_graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert is_family_member(theta) is None

    def test_labels(self):
        assert [str(d) for d in all_descriptors()[:2]] == ["P1", "P2"]
        assert str(FamilyDescriptor(FamilyKind.STAR3EXT, (2,))) == "Star3^2"
        assert str(FamilyDescriptor(FamilyKind.SPIDER, (3, 1, 1))) == "Spider(3,1,1)"


class TestNormalizedSuite:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_paths(self, k):
        assert cd_graph(make_path(k))

    @pytest.mark.parametrize("n", range(5, 13))
    def test_cycles(self, n):
        assert cd_graph(make_cycle(n))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_stars(self, n):
        assert cd_graph(make_star(n))

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_star3_ext(self, i):
        assert cd_graph(make_star3_ext(i))

    def test_spider_311_fails_at_its_middle_vertex(self):
        g = make_spider(3, 1, 1)
        failing = [x for x in g.vertices if not cd_at(g, x)]
        assert failing
        # the failing vertex is the degree-2 vertex next to the centre on the long leg
        for x in failing:
            assert len(g.adj[x]) == 2 and 0 in g.adj[x]

    @pytest.mark.parametrize("n, mode, K", [(3, "normalized", 1.25), (4, "normalized", 1.0), (4, "physical", 2.0)])
    def test_short_cycles_have_known_curvature(self, n, mode, K):
        # outside the girth-5 regime, yet positively curved
        g = make_cycle(n, mode)
        assert cd_graph(g)
        assert all(abs(curvature_value_at(g, x) - K) < 1e-9 for x in g.vertices)


class TestPhysicalSuite:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_paths(self, k):
        assert cd_graph(make_path(k, "physical"))

    @pytest.mark.parametrize("n", range(5, 13))
    def test_cycles(self, n):
        assert cd_graph(make_cycle(n, "physical"))

    def test_star3(self):
        assert cd_graph(make_star(3, "physical"))

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_larger_stars_fail_at_centre(self, n):
        # the centre form is (sum Y)^2 >= ((n-3)/2) sum Y^2, false for n >= 4
        g = make_star(n, "physical")
        assert not cd_at(g, 0)
        assert cd_at(g, 1) == (n <= 5)


class TestShorthand:
    @pytest.mark.parametrize(
        "text, desc",
        [
            ("family:path:6", FamilyDescriptor(FamilyKind.PATH, (6,))),
            ("family:cycle:5", FamilyDescriptor(FamilyKind.CYCLE, (5,))),
            ("family:star:4", FamilyDescriptor(FamilyKind.STAR, (4,))),
            ("family:star3ext:2", FamilyDescriptor(FamilyKind.STAR3EXT, (2,))),
            ("family:spider:3,1,1", FamilyDescriptor(FamilyKind.SPIDER, (3, 1, 1))),
        ],
    )
    def test_parse(self, text, desc):
        assert is_family_member(from_shorthand(text)) == desc

    def test_petersen(self):
        assert from_shorthand("family:petersen") == make_petersen()

    def test_mode(self):
        assert from_shorthand("family:cycle:5", "physical").m == (1,) * 5

    @pytest.mark.parametrize(
        "text", ["path:6", "family:tree:3", "family:path", "family:path:x", "family:spider:1,2", "family:star:2"]
    )
    def test_bad(self, text):
        with pytest.raises(BadParameter):
            from_shorthand(text)


class TestSurrogates:
    def test_line(self):
        g = make_path(10)
        assert line_surrogate_vertices(g) == [3, 4, 5, 6, 7]
        assert all(cd_at(g, x) for x in line_surrogate_vertices(g))

    def test_half_line(self):
        g = make_path(10)
        verts = half_line_surrogate_vertices(g)
        assert 0 in verts and 10 not in verts
        assert all(cd_at(g, x) for x in verts)

    def test_rejects_non_path(self):
        with pytest.raises(BadParameter):
            line_surrogate_vertices(make_cycle(6))


def test_generated_graphs_are_valid(rng):
    for desc in all_descriptors():
        g = desc.build()
        assert len(set(g.edges)) == len(g.edges)
        assert all(u != v for u, v in g.edges)
        assert np.isfinite(max(len(a) for a in g.adj))
