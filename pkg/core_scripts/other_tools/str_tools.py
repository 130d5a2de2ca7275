#!/usr/bin/env python
"""
str_tools

tools to name output directories and render node sets as text
"""
from __future__ import absolute_import

import os


def f_scenario_stem(scenario_path):
    """ stem = f_scenario_stem(scenario_path)
    File name of the scenario without directory and extension,
    used to name per-scenario output directories
    """
    return os.path.splitext(os.path.basename(scenario_path))[0]

def f_node_set_str(nodes):
    """ text = f_node_set_str(nodes)
    Render a 0-based node collection as the 1-based set used in reports,
    e.g., {0, 2} -> "{1, 3}"
    """
    if nodes is None:
        return "none"
    return "{" + ", ".join(str(x + 1) for x in sorted(nodes)) + "}"

if __name__ == "__main__":
    print("string tools")
