from painleve_forms.lax import LaxForms, LaxPair, build_lax, compat_residual
from painleve_forms.pvi import pvi_rhs, x_flow
from painleve_forms.riccati import Residues, RiccatiForms, hamiltonian_check, residues, riccati_forms
from painleve_forms.theta import FuchsParams, PviParams, Theta, theta_correspondence
