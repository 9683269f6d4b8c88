"""Generate Catalan-like numbers from (sigma, tau) recurrence data.

A pair sigma = (s_0, s_1, ...), tau = (t_1, t_2, ...) defines a unit
lower-triangular matrix by

    r[n+1][k] = r[n][k-1] + s_k r[n][k] + t_{k+1} r[n][k+1]

and column 0 is the sequence.  Eleven classical families arise from
eventually-constant data (p, s; q, t).

Run:  python3 demos/01_catalog_and_recursive_matrices.py
"""

from momentlab import CATALOG, catalan_like, catalog_sequence, make_spec, recursive_matrix

print("The catalog, first 10 terms each:")
for name, quad in CATALOG.items():
    _, seq = catalog_sequence(name, 9)
    terms = ", ".join(str(v) for v in seq)
    print(f"  {name:18s} {str(quad):14s} {terms}")

print()
print("The recursive matrix behind the Catalan numbers (first 6 rows):")
matrix = recursive_matrix(make_spec(1, 2, 1, 1), 5)
for row in matrix.rows:
    print("   ", "  ".join(f"{str(v):>4s}" for v in row))
print("Column 0 reads 1, 1, 2, 5, 14, 42: the Catalan numbers.")

print()
print("Any exact rational data works; here (p, s; q, t) = (1/2, 2; 1/3, 1):")
spec = make_spec("1/2", 2, "1/3", 1)
print("  y =", ", ".join(str(v) for v in catalan_like(spec, 6)))

print()
print("Sequences serialize exactly (JSON keeps num/den strings):")
_, riordan = catalog_sequence("riordan", 6)
print(" ", riordan.to_json())
