"""Regenerate the bundled example files under src/kcat/data."""

from pathlib import Path

from kcat import io
from kcat.field import QQ, Field
from kcat.hopf import FiniteGroup, group_algebra
from kcat.library import a2, dual_numbers, group_category, k_times_k, perturbed_kc2

OUT = Path(__file__).resolve().parent.parent / "src" / "kcat" / "data"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    C2 = FiniteGroup.cyclic(2)
    C2.name = "C2"
    io.dump(io.group_to_dict(C2), OUT / "c2.json")
    io.dump(io.category_to_dict(a2()), OUT / "a2.json")
    kc2 = group_category(C2)
    io.dump(io.category_to_dict(kc2), OUT / "kc2.json")
    io.dump(io.category_to_dict(perturbed_kc2()), OUT / "kc2_perturbed.json")
    io.dump({"category": "kc2.json", "group": "c2.json", "degrees": {"1": "1", "t": "t"}},
            OUT / "kc2_grading.json")
    io.dump({"category": "kc2.json", "group": "c2.json", "degrees": {"1": "t", "t": "1"}},
            OUT / "kc2_bad_grading.json")
    io.dump(io.category_to_dict(dual_numbers()), OUT / "dual_numbers.json")
    io.dump(io.category_to_dict(dual_numbers(Field.prime(3))), OUT / "dual_numbers_f3.json")
    sign = {"1": {"*->*": [["1", "0"], ["0", "1"]]}, "t": {"*->*": [["1", "0"], ["0", "-1"]]}}
    io.dump({"category": "dual_numbers.json", "group": "c2.json", "matrices": sign}, OUT / "sign_action.json")
    io.dump({"category": "dual_numbers_f3.json", "group": "c2.json", "matrices": sign},
            OUT / "sign_action_f3.json")
    io.dump({"category": "dual_numbers.json", "group": "c2.json",
             "object_perm": {"1": {"*": "*"}, "t": {"*": "*"}},
             "hom_matrices": {g: m for g, m in sign.items()}}, OUT / "sign_group_action.json")
    io.dump(io.hopf_to_dict(group_algebra(C2, QQ)), OUT / "kc2_hopf.json")
    bad = io.hopf_to_dict(group_algebra(C2, QQ))
    bad["comult"] = [{"h": "1", "out": [["1", "1", "1"]]}, {"h": "t", "out": [["t", "1", "1"]]}]
    io.dump(bad, OUT / "kc2_bad_hopf.json")
    io.dump(io.category_to_dict(k_times_k(Field.prime(2))), OUT / "kxk_f2.json")
    one = [["1"]]
    io.dump({"category": "a2.json", "name": "M",
             "dims": {"x": 1, "y": 1},
             "action": {"x->x": {"1x": one}, "y->y": {"1y": one}, "x->y": {"alpha": one}}},
            OUT / "a2_module.json")
    io.dump({"blocks": [["x", "y"]], "names": ["*"]}, OUT / "a2_whole.json")
    io.dump({"kind": "matrix", "n": 2}, OUT / "matrix_context_2.json")
    io.dump({"kind": "identity"}, OUT / "identity_context.json")
    io.dump({"index_sets": {"*": ["1", "t"]}}, OUT / "inflate_c2.json")


if __name__ == "__main__":
    main()
