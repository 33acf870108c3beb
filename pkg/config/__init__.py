# LadderKit - exact factorization-method engine for five solvable quantum systems
