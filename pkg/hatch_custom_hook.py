# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
import shutil
from pathlib import Path
from typing import Any

from hatchling.builders.hooks.plugin.interface import BuildHookInterface


class HatchCustomBuildHook(BuildHookInterface):
    """
    Custom build hook (https://hatch.pypa.io/latest/plugins/build-hook/custom/) that copies the
    _version.py written by hatch-vcs into the package, so rll.shift_codes can report its
    version. Configured by `[tool.hatch.build.hooks.custom.copy_version_py]` in pyproject.toml.
    """

    def _destinations(self) -> list[Path]:
        if sorted(self.config) != ["copy_version_py", "path"] or list(
            self.config["copy_version_py"]
        ) != ["destinations"]:
            raise RuntimeError(
                "Configuration of the custom build hook must be like "
                "{ 'copy_version_py': {'destinations': ['path1', ...]}}."
                + f" Received:\n{self.config}"
            )
        return [Path(self.root) / d for d in self.config["copy_version_py"]["destinations"]]

    def initialize(self, version: str, build_data: dict[str, Any]) -> None:
        source = Path(self.root) / "_version.py"
        for destination in self._destinations():
            self.app.display_info(f"Copying {source.name} to {destination}")
            shutil.copy(source, destination)

    def clean(self, versions: list[str]) -> None:
        removed = 0
        for destination in self._destinations():
            target = destination / "_version.py"
            if target.exists():
                target.unlink()
                removed += 1
        self.app.display_info(f"Removed {removed} copies of _version.py")
