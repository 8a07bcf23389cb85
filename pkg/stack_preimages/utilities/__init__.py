from stack_preimages.utilities.utilities import Timer, parallel_map, timed

__all__ = ["parallel_map", "timed", "Timer"]
