"""Rainbow-copy search: soundness, completeness, and symmetry."""

import random

import pytest

from antiramsey import (
    Custom,
    Cycle,
    EdgeColoring,
    Embedding,
    Graph,
    Matching,
    Path,
    TriplePath,
    Union,
    all_distinct,
    build_pattern,
    check_embedding,
    clique_coloring,
    cover_coloring,
    find_rainbow,
    is_rainbow_free,
    monochromatic,
)

from brute import naive_has_rainbow, random_surjective_coloring

PATTERNS = [
    Matching(1), Matching(2), TriplePath(1), Path(3), Path(4),
    Cycle(3), Cycle(4), Union(TriplePath(1), Matching(1)),
    Union(Cycle(3), Matching(1)),
]


class TestBasics:
    def test_all_distinct_host_has_everything(self):
        emb = find_rainbow(all_distinct(5), Matching(2))
        assert emb is not None
        assert check_embedding(all_distinct(5), Matching(2), emb)

    def test_monochromatic_host_has_no_two_edges(self):
        assert find_rainbow(monochromatic(5), Matching(2)) is None
        assert is_rainbow_free(monochromatic(6), TriplePath(1))

    def test_single_edge_always_found(self):
        assert find_rainbow(monochromatic(4), Matching(1)) is not None

    def test_all_distinct_triangle(self):
        assert not is_rainbow_free(all_distinct(6), Cycle(3))

    def test_cover_coloring_blocks_two_triples(self):
        assert find_rainbow(cover_coloring(11, 1, 1), TriplePath(2)) is None

    def test_clique_coloring_blocks_triples(self):
        assert is_rainbow_free(clique_coloring(12, 4), TriplePath(2))
        assert is_rainbow_free(clique_coloring(12, 4), TriplePath(3))
        assert is_rainbow_free(clique_coloring(12, 7), TriplePath(3))

    def test_pattern_larger_than_host(self):
        with pytest.raises(ValueError):
            find_rainbow(monochromatic(4), Matching(3))

    def test_edgeless_pattern_trivially_embeds(self):
        emb = find_rainbow(monochromatic(4), Custom(Graph(3)))
        assert emb == Embedding((0, 1, 2))


class TestCheckEmbedding:
    def test_identity_into_all_distinct(self):
        assert check_embedding(all_distinct(3), TriplePath(1), Embedding((0, 1, 2)))

    def test_monochromatic_two_edges_fail(self):
        assert not check_embedding(monochromatic(4), TriplePath(1), Embedding((0, 1, 2)))

    def test_repeated_target_fails(self):
        assert not check_embedding(all_distinct(4), TriplePath(1), Embedding((0, 1, 0)))

    def test_wrong_length_fails(self):
        assert not check_embedding(all_distinct(4), TriplePath(1), Embedding((0, 1)))

    def test_out_of_range_fails(self):
        assert not check_embedding(all_distinct(4), TriplePath(1), Embedding((0, 1, 9)))


class TestOracleEquivalence:
    def test_matches_naive_enumeration_on_random_hosts(self):
        rng = random.Random(2718)
        checked = 0
        for _ in range(120):
            n = rng.choice([4, 5, 6])
            coloring = random_surjective_coloring(rng, n, rng.randrange(1, n * (n - 1) // 2 + 1))
            for spec in PATTERNS:
                g = build_pattern(spec)
                if g.n > n:
                    continue
                emb = find_rainbow(coloring, spec)
                assert (emb is not None) == naive_has_rainbow(coloring, g), (spec, coloring)
                if emb is not None:
                    assert check_embedding(coloring, spec, emb)
                checked += 1
        assert checked > 500

    def test_matches_naive_on_structured_colorings(self):
        colorings = [
            cover_coloring(7, 1, 1), cover_coloring(7, 2, 2),
            cover_coloring(6, 0, 3), clique_coloring(7, 4), clique_coloring(6, 3),
        ]
        for coloring in colorings:
            for spec in PATTERNS:
                g = build_pattern(spec)
                if g.n > coloring.n:
                    continue
                assert (find_rainbow(coloring, spec) is not None) \
                    == naive_has_rainbow(coloring, g), (spec, coloring.colors)


class TestRefinementMonotonicity:
    def test_splitting_a_color_class_keeps_the_witness(self):
        rng = random.Random(1618)
        for _ in range(80):
            n = rng.choice([5, 6])
            coloring = random_surjective_coloring(rng, n, 4)
            for spec in PATTERNS:
                g = build_pattern(spec)
                if g.n > n:
                    continue
                emb = find_rainbow(coloring, spec)
                if emb is None:
                    continue
                # split the largest color class: recolor half of it fresh
                cols = list(coloring.colors)
                largest = max(set(cols), key=cols.count)
                members = [i for i, c in enumerate(cols) if c == largest]
                if len(members) < 2:
                    continue
                fresh = coloring.num_colors
                for idx in members[: len(members) // 2]:
                    cols[idx] = fresh
                refined = EdgeColoring(n, tuple(cols))
                assert check_embedding(refined, spec, emb)

    def test_refinement_never_destroys_existence(self):
        # a rainbow copy in the coarse coloring is still rainbow after the split
        coloring = cover_coloring(8, 1, 2)
        for spec in PATTERNS:
            g = build_pattern(spec)
            if g.n > 8:
                continue
            if find_rainbow(coloring, spec) is not None:
                finer = all_distinct(8)  # the finest refinement of anything
                assert find_rainbow(finer, spec) is not None


class TestHostSymmetry:
    def test_relabeling_preserves_the_verdict(self):
        rng = random.Random(777)
        for _ in range(60):
            n = rng.choice([5, 6])
            coloring = random_surjective_coloring(rng, n, rng.randrange(1, 8))
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = coloring.relabel(perm)
            for spec in PATTERNS:
                if build_pattern(spec).n > n:
                    continue
                assert is_rainbow_free(coloring, spec) \
                    == is_rainbow_free(relabeled, spec), (perm, spec)

    def test_determinism(self):
        coloring = cover_coloring(9, 2, 2)
        runs = [find_rainbow(coloring, Union(TriplePath(1), Matching(1)))
                for _ in range(3)]
        assert runs[0] == runs[1] == runs[2]


class TestLargeRainbowFreeInstances:
    # adversarial inputs: rainbow-free hosts force the search to prove absence
    @pytest.mark.parametrize("pattern,cover_size", [
        (Path(11), 4),
        (Cycle(12), 4),
        (Matching(6), 4),
        (TriplePath(4), 3),
        (Union(Path(7), Matching(2)), 3),
    ])
    def test_twelve_vertex_hosts_complete_quickly(self, pattern, cover_size):
        coloring = cover_coloring(12, cover_size, 1)
        assert is_rainbow_free(coloring, pattern)
