# LadderKit — Systems package
