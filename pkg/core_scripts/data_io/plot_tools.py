#!/usr/bin/env python
"""
plot_tools

Line plots of integrated trajectories, written as SVG files.
"""
from __future__ import absolute_import

import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

import core_scripts.data_io.io_tools as nii_io_tk


def f_plot_trajectory(traj, file_path, switch_instants=(), title=None):
    """ f_plot_trajectory(traj, file_path, switch_instants=(), title=None)

    input
    -----
      traj:            Trajectory
      file_path:       output path, the format follows the extension (.svg)
      switch_instants: instants marked by thin vertical lines
      title:           optional figure title

    All x_i(t) are drawn; closed-loop runs overlay the targets x_d,i as
    dashed horizontal lines in the color of agent i.
    """
    fig, ax = plt.subplots(figsize=(8, 4.5))
    colors = plt.rcParams['axes.prop_cycle'].by_key()['color']
    for idx in range(traj.n_agents):
        color = colors[idx % len(colors)]
        ax.plot(traj.times, traj.states[:, idx], color=color,
                linewidth=1.0, label='$x_{{{:d}}}$'.format(idx + 1))
        if traj.closed_loop:
            ax.axhline(y=traj.x_target[idx], color=color, linestyle='--',
                       linewidth=0.8)
    for t in switch_instants:
        ax.axvline(x=t, color='k', linestyle=':', linewidth=0.3)

    ax.set_xlabel('t')
    ax.set_ylabel('x(t)')
    ax.set_xlim(traj.times[0], traj.times[-1])
    if title:
        ax.set_title(title)
    ax.grid(True, linestyle='--', linewidth=0.5)
    ax.legend(loc='upper right', fontsize=8,
              ncol=int(np.ceil(traj.n_agents / 8)))
    fig.tight_layout()

    nii_io_tk.f_make_dir(os.path.dirname(file_path))
    fig.savefig(file_path)
    plt.close(fig)
    return file_path


if __name__ == "__main__":
    print("Trajectory plots")
