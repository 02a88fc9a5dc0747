#!/usr/bin/env python3
"""Exact model count of a DIMACS CNF read from stdin, via pycosat solution enumeration."""
import sys

import pycosat


def main() -> int:
    num_vars = None
    clauses, current = [], []
    for line in sys.stdin:
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            num_vars = int(tokens[2])
            continue
        for tok in tokens:
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        print("missing header", file=sys.stderr)
        return 1
    if any(len(c) == 0 for c in clauses):
        print(0)
        return 0
    if not clauses:
        print(2 ** num_vars)
        return 0
    print(sum(1 for _ in pycosat.itersolve(clauses, vars=num_vars)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
