"""Model Context Protocol server for the amplifier simulator."""
