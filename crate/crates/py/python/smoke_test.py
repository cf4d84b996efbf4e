"""Smoke test for the symset_py extension.

Build and install first, e.g. `maturin develop --release` from crates/py,
then run `python python/smoke_test.py`.
"""

import json

import symset_py as s


def main():
    a = s.PermMultiset([s.Permutation(w) for w in ["1324", "4132"]])
    b = s.PermMultiset([s.Permutation(w) for w in ["2143", "2314"]])
    assert len(a) == 2 and a.degree == 4

    label, schur = a.classify()
    # m_22 + m_211 + 2 m_1111 is the single Schur function s_22
    assert label == "fine", label
    assert schur == {(2, 2): 1}, schur

    m = a.q_monomial()
    assert m[(2, 2)] == 1 and m[(1, 1, 1, 1)] == 2, m
    ab = a.product(b)
    assert ab.classify()[0] == "not_symmetric"
    m_ab = ab.q_monomial()
    assert m_ab[(3, 1)] == 1 and (1, 3) not in m_ab, m_ab

    report = json.loads(a.check_theorem())
    assert all(report[k]["holds"] for k in
               ["a_d_symmetric", "b_d_commutative", "c_right_invariant",
                "d_left_invariant", "e_symmetric"])

    image = a.psi([[1, 3], [2, 4]])
    assert sorted(image) == [0, 1]

    p, q = s.rs(s.Permutation("4132"))
    assert p.rows() == [[1, 2], [3], [4]]
    assert q.descent_set() == s.Permutation("4132").descent_set() == [1, 3]

    t = s.StandardTableau([[1, 3, 6, 7], [2, 5, 9, 11], [4, 10, 13, 15], [8, 14], [12]])
    assert t.promote(3, 12).rows() == [[1, 4, 5, 6], [2, 8, 10, 12], [3, 9, 13, 15], [7, 14], [11]]
    assert t.promote_set([3, 9, 10]).rows()[1] == [2, 8, 12, 14]
    assert t.promote(3, 12).inverse_promote(3, 12) == t

    assert s.conjugacy_class(4, [2, 1, 1]).classify()[0] == "fine"
    assert [str(x) for x, _ in s.j_class(4, [2]).items()] == \
        ["1234", "1324", "1342", "3124", "3142", "3412"]

    rep = json.loads(s.run_campaign(json.dumps({"degree": 3, "mode": "exhaustive_subsets"})))
    assert rep["population"]["instances"] == 64
    assert rep["violations"]["disagreements"] == 0

    try:
        s.Permutation("1224")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid permutation accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
