__name__ = "levelfrac"
__name_desc__ = "Level-set Volume Fractions"
__version__ = "1.0.0"
__description__ = "levelfrac, exact volume fractions of multilinear level-set cells"
__url__ = "https://github.com/ssh3ll/levelfrac"
