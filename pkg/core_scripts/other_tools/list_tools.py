#!/usr/bin/env python
"""
list_tools.py

Tools to process node index lists (1-based in files, 0-based inside)
"""
from __future__ import absolute_import


def f_to_zero_based(indices):
    """ out = f_to_zero_based(indices)
    Convert 1-based agent indices (file convention) into 0-based ones

    Args:
        indices: iterable of int
    Return:
        out: tuple of int
    """
    return tuple(int(x) - 1 for x in indices)

def f_to_one_based(indices):
    """ out = f_to_one_based(indices)
    Convert 0-based indices into sorted 1-based ones for serialization
    """
    return [int(x) + 1 for x in sorted(indices)]

def members_in_a_not_in_b(list_a, list_b):
    """ members_in_a_not_b(list_a, list_b):
    Return a sorted list of members that are in list_a but not in list_b

    Args:
        list_a: list
        list_b: list
    Return:
        list
    """
    return sorted(set(list_a) - set(list_b))

def f_complement(nodes, n):
    """ rest = f_complement(nodes, n)
    Sorted tuple of {0, ..., n-1} minus nodes, e.g., the receiver set
    R = V \\ S
    """
    return tuple(members_in_a_not_in_b(range(n), nodes))

if __name__ == "__main__":
    print("Definition of tools for index list operation")
