"""polygon-zcl MCP Server"""
