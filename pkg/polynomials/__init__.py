# LadderKit — Polynomials package
