"""List graphs attaining a bound with equality, optionally with family witnesses.

    python3 scripts/hunt_tight.py eq-rho_o-n/delta --n-max 6
"""
import argparse

from packbound.enumeration import enumerate_connected_upto
from packbound.families import Family, recognize
from packbound.graph import parse_graph6
from packbound.verifier import ClaimId, hunt_tight

FAMILY_FOR = {
    ClaimId.THM22_RHO_O: Family.SIGMA,
    ClaimId.RHO_O_MIN_DEGREE: Family.GAMMA,
    ClaimId.REMARK_RHO: Family.GAMMA_PRIME,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("claim", choices=[c.value for c in ClaimId if c is not ClaimId.LK_THRESHOLD])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    claim = ClaimId(args.claim)
    hits = hunt_tight(claim, enumerate_connected_upto(args.n_max), jobs=args.jobs)
    family = FAMILY_FOR.get(claim)
    for g6 in hits:
        if family is None:
            print(g6)
        else:
            w = recognize(parse_graph6(g6), family)
            print(g6, w.to_dict() if w else "no witness")
    print(f"# {len(hits)} tight graphs")


if __name__ == "__main__":
    main()
