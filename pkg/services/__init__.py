"""Servicios: HNF, conectividad, descomposición, lote y autocomprobación."""
