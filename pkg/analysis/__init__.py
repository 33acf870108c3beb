# LadderKit — Analysis package
