"""Dense spectral analysis and the spectral example catalog."""
