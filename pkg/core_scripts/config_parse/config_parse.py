#!/usr/bin/env python
"""
config_parse

Configuration parser for the numerical knobs of a run

Optional INI file, e.g.

  [graph]
  grid_per_dwell = 20
  path_node_cap = 16

  [certify]
  tol_rel = 1e-6
  tol_win = 1e-6
  dini_factor = 10
  final_threshold = 1e-2
  residual_tol = 1e-9
  chi = 0.5
  verbose = no
"""
from __future__ import absolute_import

import configparser
import dataclasses
import math
import os
from dataclasses import dataclass
from typing import Optional

import core_scripts.cert_manager.cert_manager_conf as nii_cconf
import core_scripts.graph_tools.conf as nii_gconf
from core_scripts.errors import DomainError


@dataclass(frozen=True)
class RunOptions:
    """ Every tunable of analyze / simulate / certify

    chi: None selects the default chi = zeta
    """
    grid_per_dwell: int = nii_gconf.grid_per_dwell
    path_node_cap: int = nii_gconf.path_node_cap
    tol_rel: float = nii_cconf.default_tol_rel
    tol_win: float = nii_cconf.default_tol_win
    dini_factor: float = nii_cconf.default_dini_factor
    final_threshold: float = nii_cconf.default_final_threshold
    residual_tol: float = nii_cconf.default_residual_tol
    chi: Optional[float] = None
    verbose: bool = False

    def __post_init__(self):
        if self.grid_per_dwell < 1 or self.path_node_cap < 1:
            raise DomainError("grid_per_dwell and path_node_cap must be >= 1")
        for key in ('tol_rel', 'tol_win', 'dini_factor', 'final_threshold',
                    'residual_tol'):
            value = getattr(self, key)
            if not (math.isfinite(value) and value >= 0):
                raise DomainError("{} must be finite and >= 0".format(key))
        if self.chi is not None and not 0 < self.chi <= 1:
            raise DomainError("chi must lie in (0, 1]")

    def replace(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)


# (keyword, section, config_type)
_OPTION_KEYS = (('grid_per_dwell', 'graph', 'int'),
                ('path_node_cap', 'graph', 'int'),
                ('tol_rel', 'certify', 'float'),
                ('tol_win', 'certify', 'float'),
                ('dini_factor', 'certify', 'float'),
                ('final_threshold', 'certify', 'float'),
                ('residual_tol', 'certify', 'float'),
                ('chi', 'certify', 'float'),
                ('verbose', 'certify', 'bool'))


class ConfigParse:
    """ ConfigParse
    class to parse input configuration file
    """
    def __init__(self, config_path):
        if not os.path.isfile(config_path):
            raise DomainError("Cannot find {}".format(config_path))
        self.m_config_path = config_path
        self.m_config = configparser.ConfigParser()
        try:
            self.m_config.read(self.m_config_path)
        except configparser.Error as err:
            raise DomainError("Fail to parse {}: {}".format(
                config_path, err)) from err

    def f_retrieve(self, keyword, section_name=None, config_type=None):
        """ f_retrieve(self, keyword, section_name=None, config_type=None)
        retrieve the keyword from config file

        Return:
           value: string, int, float, bool, or None if absent

        Parameters:
           keyword: 'keyword' to be retrieved
           section: which section is this keyword in the config.
                    None will search all the config sections and
                    return the first
           config_type: which can be 'int', 'float', 'bool' or None.
                    None will return the value as a string
        """
        if section_name is None:
            for name in self.m_config.sections():
                value = self.f_retrieve(keyword, name, config_type)
                if value is not None:
                    return value
            return None
        if section_name not in self.m_config.sections():
            return None
        tmp_sec = self.m_config[section_name]
        try:
            if config_type == 'int':
                return tmp_sec.getint(keyword, fallback=None)
            if config_type == 'float':
                return tmp_sec.getfloat(keyword, fallback=None)
            if config_type == 'bool':
                return tmp_sec.getboolean(keyword, fallback=None)
        except ValueError as err:
            raise DomainError("[{}] {}: {}".format(
                section_name, keyword, err)) from err
        return tmp_sec.get(keyword, fallback=None)


def f_run_options(config_path=None, **overrides):
    """ options = f_run_options(config_path=None, **overrides)
    Defaults, then the INI file, then explicit overrides (None is ignored)
    """
    options = RunOptions()
    if config_path is not None:
        parser = ConfigParse(config_path)
        values = {}
        for keyword, section, config_type in _OPTION_KEYS:
            value = parser.f_retrieve(keyword, section, config_type)
            if value is not None:
                values[keyword] = value
        options = options.replace(**values)
    return options.replace(**overrides)


if __name__ == "__main__":
    print("Configuration parser for run options")
