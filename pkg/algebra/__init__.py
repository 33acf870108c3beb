# LadderKit — Operator algebra package
