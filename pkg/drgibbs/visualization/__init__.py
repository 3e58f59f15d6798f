# Figures of regions, dual clouds and densities

from .plotting import plot_region, plot_accumulation, plot_density

__all__ = [
    'plot_region',
    'plot_accumulation',
    'plot_density',
]
