from .src.forbiddenkit.main import run_tool
