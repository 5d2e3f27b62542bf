"""Second eigenvalues and cuts for non-reversible chains.

A directed chain has a complex spectrum, so the certificates come from
Chung's symmetric Laplacian I - (Pi^{1/2} P Pi^{-1/2} + transpose)/2 instead.
The demo checks the directed Cheeger pair phi_1^2/2 <= lambda2 <= 2 phi_1 and
the phi_p bound on random strongly connected chains, and shows that for a
reversible input the directed and reversible eigenvalues coincide.
"""

from isoperim import (
    WeightedGraph,
    chain_from_directed,
    check_chung,
    check_phi_p_upper_bound,
    gen_cycle,
    gen_random_directed,
    lambda2_directed,
    lambda2_reversible,
    sweep_cut,
)


def main():
    ring = chain_from_directed(
        WeightedGraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)), directed=True)
    )
    cert = lambda2_directed(ring)
    print(f"directed 3-cycle: pi = {ring.pi.round(4)}, lambda2(Chung) = {cert.lambda2:.4f}")
    lower, upper = check_chung(ring)
    print(f"  {lower.name}: {lower.lhs:.4f} <= {lower.rhs:.4f}  holds={lower.holds}")
    print(f"  {upper.name}: {upper.lhs:.4f} <= {upper.rhs:.4f}  holds={upper.holds}")

    print("\nrandom strongly connected chains:")
    for seed in range(4):
        c = gen_random_directed(7, density=0.4, seed=seed)
        cert = lambda2_directed(c)
        rep = check_phi_p_upper_bound(c, 0.75, use_directed=True)
        sw = sweep_cut(c, 0.75, cert)
        print(
            f"  seed={seed}: lambda2={cert.lambda2:.4f}  phi_.75^2={rep.lhs:.4f} <= {rep.rhs:.4f}"
            f"  holds={rep.holds}  sweep set={sw.subset} phi={sw.phi:.4f}"
        )

    c = gen_cycle(5)
    print(
        f"\nreversible input: lambda2 reversible = {lambda2_reversible(c).lambda2:.12f}"
        f" vs directed = {lambda2_directed(c).lambda2:.12f} (identical matrices)"
    )


if __name__ == "__main__":
    main()
