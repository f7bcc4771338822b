"""
Strings, distances, and instance files
======================================

A closest-string instance is a set of equal-length strings over one
alphabet; the goal is a center string whose largest Hamming distance to
the set is as small as possible. This walkthrough covers the domain
types, the text file format, and seeded random generation.
"""

from closest_string import (
    Alphabet,
    GeneratorConfig,
    generate_uniform,
    hamming_distance,
    objective,
    parse_instance,
    serialize_instance,
    validate_instance,
)

# The Hamming distance counts disagreeing positions.
print("d(ACGT, AGGT) =", hamming_distance("ACGT", "AGGT"))
print("d(000, 111)  =", hamming_distance("000", "111"))

# An instance infers its alphabet (sorted) unless one is given explicitly.
inst = validate_instance(["ACG", "ACT", "CCG"])
print("\ninstance: m =", inst.m, "n =", inst.n,
      "alphabet =", "".join(inst.alphabet.symbols))

# Evaluating a candidate center gives per-string distances and their max.
cand = objective("ACG", inst)
print("center", cand.chars, "-> distances", cand.distances,
      "objective", cand.objective)

# The file format is line oriented: comments, blank lines, and an
# optional explicit alphabet header.
text = "# a tiny binary instance\nalphabet: 01\n00\n11\n"
parsed = parse_instance(text)
print("\nparsed:", parsed.strings, "over", "".join(parsed.alphabet.symbols))
print("serialized round trip:\n" + serialize_instance(parsed))

# Random instances are reproducible: the seed pins the PCG64 stream.
cfg = GeneratorConfig(m=3, n=10, alphabet=Alphabet.from_string("ACGT"), seed=7)
print("seed 7 ->", generate_uniform(cfg).strings)
print("again  ->", generate_uniform(cfg).strings)
