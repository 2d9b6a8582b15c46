"""Fractional diffusion problems, assembly, preconditioners and time stepping."""
