"""Walk through the word codings: prime codes, ranks and the dense family."""

from bairecomb import seqcoding as sc

print("prime codes of some small words")
for w in [(), (0,), (1,), (1, 0), (1, 0, 2)]:
    c = sc.prime_code(w)
    print("  %-12r -> %-6d (decodes back to %r)" % (w, c, sc.prime_decode(c)))

print()
print("not every integer is a code: a code must use consecutive primes")
for c in (10, 12, 25, 30):
    print("  %-3d valid: %s" % (c, sc.is_seq_code(c)))

print()
print("the first 15 codes in increasing order, with their ranks")
for n in range(15):
    c = sc._table.code_at(n)
    print("  rank %2d: code %3d = word %r" % (n, c, sc.psi(sc.OMEGA, n)))

print()
print("dense words: the n-th enumerated word padded with zeros to length n")
for n in range(10):
    print("  n=%d: %r" % (n, sc.dense_seq(sc.OMEGA, n)))

print()
print("density: every word is a prefix of infinitely many dense words")
s = (1, 0)
m = 0
for _ in range(4):
    n = sc.density_witness(sc.OMEGA, s, m)
    print("  %r is a prefix of dense word %d: %r" % (s, n, sc.dense_seq(sc.OMEGA, n)))
    m = n + 1
