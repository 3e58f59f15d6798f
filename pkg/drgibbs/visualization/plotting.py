import matplotlib.pyplot as plt
import numpy as np
from numpy.polynomial import polynomial as P

from ..measures.spectral import sample_density
from ..positivity.bochner import dual_polynomials


def _shade_region(ax, region, color='tab:green', label='positivity region'):
    for k, (lo, hi) in enumerate(region.intervals):
        ax.axvspan(lo, hi, color=color, alpha=0.2, label=label if k == 0 else None)
    if region.isolated_points:
        ax.plot(region.isolated_points, np.zeros(len(region.isolated_points)), 'o',
                color=color, label='isolated points')


def plot_region(region, H=None, samples=801, output_file=None, figsize=(10, 5)):
    """
    Plot a positivity region over [-1, 1].

    Parameters
    ----------
    region : PositivityRegion
        Region to shade
    H : PolynomialHypergroup, optional
        Finite hypergroup; when given, ``min_j q_j(x)`` is drawn as well
    samples : int, optional
        Number of grid points, by default 801
    output_file : str, optional
        Path to save the figure, by default None
    figsize : tuple, optional
        Figure size, by default (10, 5)

    Returns
    -------
    matplotlib.figure.Figure
        Figure object
    """
    fig, ax = plt.subplots(figsize=figsize)
    _shade_region(ax, region)

    if H is not None:
        x = np.linspace(-1.0, 1.0, samples)
        coefficients = dual_polynomials(H).astype(np.float64)
        margin = P.polyval(x, coefficients.T).min(axis=0)
        # arcsinh keeps the sign and compresses large values
        ax.plot(x, np.arcsinh(margin), color='black', label='arcsinh min_j q_j(x)')
        ax.axhline(0.0, color='grey', linewidth=0.8)

    ax.set_xlim(-1.05, 1.05)
    ax.set_xlabel('x')
    ax.set_title(f'Positivity region ({region.claim})')
    ax.grid(True)
    ax.legend()

    if output_file:
        fig.savefig(output_file, dpi=300, bbox_inches='tight')

    return fig


def plot_accumulation(estimate, output_file=None, figsize=(10, 6)):
    """
    Plot the dual supports of an embedding sequence against n.

    Parameters
    ----------
    estimate : AccumulationEstimate
        Result of ``accumulation_set``
    output_file : str, optional
        Path to save the figure, by default None
    figsize : tuple, optional
        Figure size, by default (10, 6)

    Returns
    -------
    matplotlib.figure.Figure
        Figure object
    """
    fig, ax = plt.subplots(figsize=figsize)
    cloud = estimate.cloud
    ax.scatter(cloud['n'], cloud['dual_point'], s=2, color='tab:blue', label='dual points')

    for k, (lo, hi) in enumerate(estimate.predicted.intervals):
        ax.axhspan(lo, hi, color='tab:orange', alpha=0.2, label='predicted' if k == 0 else None)
    for p in estimate.predicted.isolated_points:
        ax.axhline(p, color='tab:orange', linewidth=0.8)
    for k, p in enumerate(estimate.limit_only):
        ax.axhline(p, color='tab:red', linestyle='--', linewidth=0.8,
                   label='limit only' if k == 0 else None)

    ax.set_xlabel('n')
    ax.set_ylabel('dual point')
    ax.set_title(f'Dual supports (Hausdorff distance {estimate.hausdorff:.2e})')
    ax.grid(True)
    ax.legend()

    if output_file:
        fig.savefig(output_file, dpi=300, bbox_inches='tight')

    return fig


def plot_density(measure, samples=400, output_file=None, figsize=(10, 5)):
    """
    Plot a spectral density together with its atoms.

    Parameters
    ----------
    measure : SpectralMeasure
        Measure to draw
    samples : int, optional
        Number of interior sample points, by default 400
    output_file : str, optional
        Path to save the figure, by default None
    figsize : tuple, optional
        Figure size, by default (10, 5)

    Returns
    -------
    matplotlib.figure.Figure
        Figure object
    """
    fig, ax = plt.subplots(figsize=figsize)

    lo, hi = measure.support
    if hi > lo:
        frame = sample_density(measure, samples)
        ax.plot(frame['z'], frame['density'], color='tab:blue', label='density')
    if measure.atoms:
        locations = [float(loc) for loc, _ in measure.atoms]
        weights = [float(w) for _, w in measure.atoms]
        ax.vlines(locations, 0.0, weights, color='tab:red', linewidth=2)
        ax.plot(locations, weights, 'o', color='tab:red', label='atoms')

    ax.set_xlabel('z' if measure.frame == 'natural' else 'x')
    ax.set_ylabel('density')
    ax.set_title(measure.label or 'Spectral measure')
    ax.grid(True)
    ax.legend()

    if output_file:
        fig.savefig(output_file, dpi=300, bbox_inches='tight')

    return fig
