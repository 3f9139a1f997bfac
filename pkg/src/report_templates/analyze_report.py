analyze_report = """Partition: {parts}
Weight: {weight}
Distinct parts: {distinct}
Conjugate: {conjugate}
Chess count: b = {b}, w = {w}
Signed label sum: c = {c}
Castelnuovo function: {castelnuovo}
Coefficients: {coefficients}
Reduction: {steps} star steps to {terminal}
Parameterized form: {form}
Signed coordinates: {nc}
"""
