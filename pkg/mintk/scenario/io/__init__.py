from .scn import ScnReader
