"""Pydantic schemas for MCP tool request/response contracts."""
