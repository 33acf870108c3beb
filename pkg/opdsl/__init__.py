# LadderKit — Operator DSL package
