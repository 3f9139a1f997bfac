witness_report = """Requested: b = {b}, w = {w} (n = {n}, c = {c})
Decomposition: {case} with l = {l}, b' = {b_rem}, w' = {w_rem}
Castelnuovo function: {castelnuovo}
Coefficients: {coefficients}
Witness partition: {parts}
"""
