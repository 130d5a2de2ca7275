#!/usr/bin/env python
"""
io_tools

Functions to load and write YAML documents and trajectory tables

"""
from __future__ import absolute_import

import csv
import os

import numpy as np
import yaml

import core_scripts.data_io.conf as nii_dconf


def f_make_dir(dir_path):
    """ f_make_dir(dir_path)
    Create dir_path (and parents) if it does not exist
    """
    if dir_path:
        os.makedirs(dir_path, exist_ok=True)
    return dir_path

def read_yaml(file_path):
    """ text, data, node = read_yaml(file_path)

    input
    -----
      file_path: string, path to the file

    output
    ------
      text: raw document text
      data: python object from yaml.safe_load
      node: yaml node tree (for line numbers), None for an empty document

    Raises OSError or yaml.YAMLError
    """
    with open(file_path, 'r') as file_ptr:
        text = file_ptr.read()
    return text, yaml.safe_load(text), yaml.compose(text)

def write_yaml(dic, file_path):
    """ write_yaml(dic, file_path)
    Write a dictionary to a YAML file, keeping key order

    input
    -----
      dic: dictionary to be dumped
      file_path: file to store the dictionary
    """
    f_make_dir(os.path.dirname(file_path))
    with open(file_path, 'w') as file_ptr:
        yaml.safe_dump(dic, file_ptr, sort_keys=False,
                       default_flow_style=False)
    return file_path

def f_trajectory_header(n_agents):
    """ header = f_trajectory_header(n_agents)
    t, x_1..x_N, u_1..u_N, h, c, h_e, c_e
    """
    return ['t'] + ['x_{:d}'.format(i + 1) for i in range(n_agents)] \
        + ['u_{:d}'.format(i + 1) for i in range(n_agents)] \
        + ['h', 'c', 'h_e', 'c_e']

def f_write_trajectory_csv(traj, file_path):
    """ f_write_trajectory_csv(traj, file_path)
    One row per grid point, 17 significant digits; the h and h_e columns
    are left empty when the receiver set is empty
    """
    n = traj.n_agents
    fmt = nii_dconf.csv_float_fmt
    columns = [traj.times[:, None], traj.states, traj.controls]
    slots = [fmt] * (1 + 2 * n)
    for series in (traj.h, traj.c, traj.h_e, traj.c_e):
        if series is None:
            slots.append('')
        else:
            slots.append(fmt)
            columns.append(series[:, None])
    data = np.hstack(columns)

    f_make_dir(os.path.dirname(file_path))
    with open(file_path, 'w') as file_ptr:
        file_ptr.write(','.join(f_trajectory_header(n)) + '\n')
        np.savetxt(file_ptr, data, fmt=','.join(slots))
    return file_path

def f_read_trajectory_csv(file_path):
    """ header, data = f_read_trajectory_csv(file_path)
    data is a float array, empty cells read as nan
    """
    with open(file_path, 'r', newline='') as file_ptr:
        reader = csv.reader(file_ptr)
        header = next(reader)
        rows = [[float(x) if x != '' else np.nan for x in row]
                for row in reader if row]
    return header, np.asarray(rows, dtype=nii_dconf.h_dtype).reshape(
        [-1, len(header)])


if __name__ == "__main__":
    print("Definition of tools for io operation")
