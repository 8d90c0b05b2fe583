"""MCP tool handlers for polygon-zcl."""
