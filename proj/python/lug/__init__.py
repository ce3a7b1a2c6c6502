"""Linking-unlinking game: word and shadow analysis, solving and strategy checks."""

import json

from . import _lug
from ._lug import LugError

strategies = _lug.strategies


def analyze_word(word):
    return json.loads(_lug.word_analysis(word))


def reduce_word(word):
    return json.loads(_lug.reduce_word(word))


def analyze_shadow(pd, budget=10000):
    return json.loads(_lug.shadow_analysis(pd, budget))


def solve_word(word, closure, first="unlinker", max_crossings=12):
    return json.loads(_lug.solve_word(word, closure, first, max_crossings))


def replay_log(text, base_dir="."):
    return json.loads(_lug.replay_log(text, base_dir))


def verify(strategy, word=None, closure=None, pd=None, first="unlinker"):
    return json.loads(_lug.verify(strategy, word, closure, pd, first))


def run_criterion(criterion, data_dir):
    return json.loads(_lug.run_criterion(criterion, data_dir))


class Game:
    def __init__(self, word=None, closure=None, pd=None, first="unlinker", budget=10000):
        self._g = _lug.Game(word, closure, pd, first, budget)

    def play(self, crossing, resolution):
        self._g.play(crossing, resolution)
        return self

    def legal_moves(self):
        return self._g.legal_moves()

    def state(self):
        return json.loads(self._g.state_json())

    def hint(self, strategy):
        return json.loads(self._g.hint_json(strategy))

    def solve(self, max_crossings=12):
        return json.loads(self._g.solve_json(max_crossings))

    @property
    def terminal(self):
        return self._g.terminal

    @property
    def mover(self):
        return self._g.mover


__all__ = ["Game", "LugError", "analyze_word", "analyze_shadow", "reduce_word", "replay_log", "run_criterion",
           "solve_word", "strategies", "verify"]
