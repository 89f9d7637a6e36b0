"""Smoke test for the qrm extension module.

Build and install first:
    cd crates/python && maturin build --release -o dist && pip install dist/qrm-*.whl
"""

import json
import itertools

import qrm


def brute_min_weight(code):
    q, rows = code.q, code.generator()
    best = None
    for msg in itertools.product(range(q), repeat=len(rows)):
        if not any(msg):
            continue
        # prime fields only: plain modular arithmetic
        word = [sum(c * r[i] for c, r in zip(msg, rows)) % q for i in range(code.n)]
        w = sum(1 for x in word if x)
        best = w if best is None else min(best, w)
    return best


def main():
    g = qrm.build_grm(3, 2, 1)
    assert (g.n, g.k, g.d) == (9, 3, 6), g
    assert g.code.min_weight() == (6, True)
    assert brute_min_weight(g.code) == 6
    assert g.code.dual() == qrm.build_grm(3, 2, 2).code
    assert sum(g.code.weight_distribution()) == 27

    c = qrm.LinearCode(3, 3, [[1, 1, 1]])
    assert c.k == 1 and c.contains([2, 2, 2]) and not c.contains([1, 0, 0])

    q = qrm.css_grm(3, 2, 1, 2)
    assert (q.n, q.k, q.d, q.pure) == (9, 3, 3, True), q
    assert q.is_symplectic_self_orthogonal() and q.all_checks_pass()
    assert json.loads(q.to_json())["construction"] == "css"

    h = qrm.hermitian_grm(3, 1, 1)
    assert (h.n, h.k, h.d) == (9, 5, 3) and h.mds

    pc = qrm.puncture_code_hermitian(3, 1, 1)
    x = pc.find_witness(6)
    assert sum(1 for v in x if v) == 6
    pq = pc.puncture(x)
    assert (pq.n, pq.k, pq.d) == (6, 2, 3), pq

    mq, w = qrm.mds_chain(4, 1)
    assert mq.params() == "[[8,4,3]]_4" and mq.singleton_slack == 0

    assert qrm.subfield_puncture_check(2, 2, 1)

    try:
        qrm.build_grm(6, 1, 0)
    except qrm.QrmError:
        pass
    else:
        raise AssertionError("GF(6) accepted")
    try:
        qrm.build_grm(3, 2, 1).code.min_weight(cap=2, strict=True)
    except qrm.CapExceeded:
        pass
    else:
        raise AssertionError("cap ignored")

    print("smoke test ok")


if __name__ == "__main__":
    main()
