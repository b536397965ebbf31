#!/usr/bin/env python3
"""Writes the bundled b-file fixtures in data/oeis.

The terms come from the classical definitions of each sequence (binomial
formulas and recurrences), independently of the library's series code. Live
b-files fetched with `schroder compare-oeis --fetch` go to the cache instead.
"""
import argparse
from math import comb
from pathlib import Path

TERMS = 31


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def large_schroeder(count):
    s = [1]
    for n in range(1, count):
        s.append(s[-1] + sum(s[k] * s[n - 1 - k] for k in range(n)))
    return s


def narayana(n, k):
    return comb(n, k) * comb(n, k - 1) // n


def write(path, sid, name, entries, note):
    lines = [f"# {sid} {name}", f"# {note}"]
    lines += [f"{n} {v}" for n, v in entries]
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("out", type=Path, nargs="?", default=Path(__file__).resolve().parent.parent / "data" / "oeis")
    out = parser.parse_args().out
    out.mkdir(parents=True, exist_ok=True)
    note = "bundled offline fixture generated from the defining formula"

    write(out / "b000108.txt", "A000108", "Catalan numbers", [(n, catalan(n)) for n in range(TERMS)], note)
    large = large_schroeder(TERMS)
    write(out / "b006318.txt", "A006318", "large Schroeder numbers", list(enumerate(large)), note)
    small = [1] + [v // 2 for v in large[1:]]
    write(out / "b001003.txt", "A001003", "small Schroeder numbers", list(enumerate(small)), note)
    tri, i = [], 1
    for n in range(1, 13):
        for k in range(1, n + 1):
            tri.append((i, narayana(n, k)))
            i += 1
    write(out / "b001263.txt", "A001263", "Narayana triangle read by rows", tri, note)
    write(out / "b078009.txt", "A078009", "initial terms as listed in the sequence entry",
          list(enumerate([1, 1, 6, 41, 306, 2426, 20076])), "bundled offline fixture, leading terms only")


if __name__ == "__main__":
    main()
