# LadderKit — Visualization package
