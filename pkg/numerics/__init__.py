from numerics.elliptic import agm, elliptic_K_agm, legendre_check
from numerics.errors import NumericDomainError, NumericsError, SingularInitialDataError, WaveTransportError
from numerics.heat import HeatResidual, heat_residual, heat_sweep
from numerics.integrator import PviTrajectory, TerminationReason, Tolerances, integrate_pvi
from numerics.wave import WaveGrid, seed_wave_grid, wave_transport
