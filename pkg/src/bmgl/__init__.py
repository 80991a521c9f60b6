"""bmgl: a desk-scale laboratory for the Banach-Mazur game and the order
invariants behind it.

Subpackages, roughly bottom-up:

- ``posets``      finite posets, antichains, Souslin numbers, Noetherian types
- ``poset_enum``  exhaustive enumeration of labeled posets (survey driver)
- ``ordinals``    symbolic ordinal arithmetic and cardinal normal forms
- ``topology``    finite spaces, regular-open algebras, cellular families
- ``completion``  Boolean completion of a separative poset
- ``regions``     symbolic region systems (Baire clopens, rational intervals,
  poset elements) used as game boards
- ``game``        the Banach-Mazur referee, strategies, k-tactics, transcripts
- ``galvin``      the coding transform turning a full-information winning
  strategy into a 2-tactic, with decode audits
- ``hechler``     the Hechler forcing order on finitely represented conditions
- ``cli``         command-line entry point
- ``service``     HTTP session service backing the interactive UI
"""

__version__ = "0.1.0"
