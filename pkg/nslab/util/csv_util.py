from pathlib import Path

import pandas as pd


class CsvUtil:
    """
    Writes result tables the same way every time: header row, fixed column order, the configured number of
    significant digits, UTF-8 with LF line endings, and empty cells for missing values.
    """

    @staticmethod
    def write_frame(frame: pd.DataFrame, path: Path, precision: int, columns: list[str] | None = None) -> Path:
        if columns is not None:
            frame = frame.reindex(columns=columns)
        frame.to_csv(path, index=False, float_format="%." + str(precision) + "g", lineterminator="\n",
                     encoding="utf-8", na_rep="")
        return path

    @staticmethod
    def write_rows(rows: list[dict], columns: list[str], path: Path, precision: int) -> Path:
        return CsvUtil.write_frame(pd.DataFrame(rows, columns=columns), path, precision)
