from elimination.certificate import EliminationCertificate, Witness
from elimination.gauge import gauge_log_derivatives, transform_lax
from elimination.pipeline import GChoice, HeatOperator, compute_F, eliminate_apparent_pole, heat_operator, run_pipeline
