"""Words, runs, embedding numbers and deletion/insertion balls.

Walks the basic objects: a q-ary word is a tuple of small ints, a run
profile is its maximal-run decomposition, and the embedding number
Emb(x; y) counts the index subsets of x that spell y, which is exactly the
number of deletion patterns turning x into y.
"""

from math import comb

from indelkit import (deletion_ball, embedding_number, format_word,
                      indel_distance, insertion_ball, insertion_ball_size,
                      parse_word, runs, tau_of_space)

x = parse_word("01001")
print(f"word x = {format_word(x)}")

profile = runs(parse_word("00111010"))
print(f"runs of 00111010: lengths {profile.run_lengths}, "
      f"count {profile.r}, longest {profile.r_max} (first at index "
      f"{profile.longest_idx})")

# Every output of a 2-deletion channel fed with x lives in this ball:
ball = deletion_ball(x, 2)
print(f"\nradius-2 deletion ball of {format_word(x)}:")
for y in ball:
    print(f"  {format_word(y)}  Emb(x; y) = {embedding_number(x, y)}")
print(f"embedding numbers sum to C(5, 2) = {comb(5, 2)}")

# Supersequences: the insertion ball size depends only on the length.
print(f"\n|I_1(110)| = {len(insertion_ball(parse_word('110'), 1, 2))} "
      f"= closed form {insertion_ball_size(3, 1, 2)}")

# The indel distance allows insertions and deletions only (no substitutions):
print(f"\nindel distance 01 <-> 10 is {indel_distance(parse_word('01'), parse_word('10'))} "
      f"(delete one symbol, insert the other)")

# Average longest-run length over all binary words of length n,
# exact as a rational; it grows like 2 log2(n).
for n in (8, 16, 24):
    t = tau_of_space(n)
    print(f"average maximal run over all 2^{n} words: {t} ~= {float(t):.4f}")
