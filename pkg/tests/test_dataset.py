import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from wbc_cluster.dataset import (WBC_COLUMNS, ClassLabel, CsvConfig, Dataset,
                                 PreprocessReport, RawTable, build_dataset,
                                 class_distribution, drop_missing_rows,
                                 load_table, parse_arff, parse_csv,
                                 preprocess, write_arff)
from wbc_cluster.exceptions import (ArffSyntax, ConfigError, DatasetError,
                                    InvalidClassValue, MalformedRow,
                                    MissingValues, NonNumericCell,
                                    UnknownColumn, UnsupportedAttributeType)

FIRST_WBC_ROW = b"1000025,5,1,1,1,2,1,3,1,1,2\n"


#___________________________________________________________________________CSV
def test_parse_csv_first_wbc_row():
    table = parse_csv(FIRST_WBC_ROW)
    assert table.n_rows == 1
    assert table.n_cols == 11
    assert table.cells[0].tolist() == [1000025, 5, 1, 1, 1, 2, 1, 3, 1, 1, 2]


def test_parse_csv_header_only():
    table = parse_csv(b"a,b,c\n", CsvConfig(header=True))
    assert table.n_rows == 0
    assert table.column_names == ("a", "b", "c")


def test_parse_csv_missing_marker():
    table = parse_csv(b"1,?,3\n4,5,?\n")
    assert table.missing_mask().tolist() == [[False, True, False],
                                             [False, False, True]]
    assert table.missing_per_column() == {"C_1": 0, "C_2": 1, "C_3": 1}


def test_parse_csv_custom_marker_and_delimiter():
    table = parse_csv(b"1;NA\n2;3\n", CsvConfig(delimiter=";",
                                                missing_marker="NA"))
    assert np.isnan(table.cells[0, 1])
    assert table.cells[1].tolist() == [2., 3.]


def test_parse_csv_malformed_row_reports_line():
    with pytest.raises(MalformedRow) as info:
        parse_csv(b"1,2,3\n4,5,6\n7,8\n")
    assert info.value.line == 3


def test_parse_csv_non_numeric_cell():
    with pytest.raises(NonNumericCell) as info:
        parse_csv(b"1,2\n3,abc\n")
    assert info.value.line == 2
    assert info.value.column == "C_2"


def test_parse_csv_blank_lines_skipped():
    table = parse_csv(b"1,2\n\n3,4\n\n")
    assert table.n_rows == 2
    assert table.row_ids == (0, 1)


def test_parse_csv_long_row_reports_line():
    with pytest.raises(MalformedRow) as info:
        parse_csv(b"1,2\n3,4\n5,6,7\n")
    assert info.value.line == 3
    assert info.value.expected == 2
    assert info.value.found == 3


def test_parse_csv_short_row_after_blank_line():
    with pytest.raises(MalformedRow) as info:
        parse_csv(b"a,b\n1,2\n\n3\n", CsvConfig(header=True))
    assert info.value.line == 4
    assert info.value.found == 1


def test_parse_csv_header_names_are_stripped():
    table = parse_csv(b" a , b\n1, 2\n", CsvConfig(header=True))
    assert table.column_names == ("a", "b")
    assert table.cells.tolist() == [[1., 2.]]


#__________________________________________________________________________ARFF
MINIMAL_ARFF = b"""% comment
@relation toy
@attribute x numeric
@attribute 'y value' REAL
@data
1,2
3,?
5.5,6
"""


def test_parse_arff_minimal_document():
    table = parse_arff(MINIMAL_ARFF)
    assert table.column_names == ("x", "y value")
    assert table.n_rows == 3
    assert table.n_cols == 2
    assert np.isnan(table.cells[1, 1])
    assert table.cells[2].tolist() == [5.5, 6.]


def test_parse_arff_nominal_class_indices():
    document = b"""@relation wbc
@attribute thickness numeric
@attribute class {2,4}
@data
5,2
8,4
1,2
"""
    table = parse_arff(document)
    assert table.column("class").tolist() == [0., 1., 0.]
    assert table.nominal_values == {"class": ("2", "4")}


@pytest.mark.parametrize("attributeType", ["string", "date 'yyyy-MM-dd'",
                                           "relational"])
def test_parse_arff_unsupported_types(attributeType):
    document = ("@relation r\n@attribute a " + attributeType +
                "\n@data\n").encode()
    with pytest.raises(UnsupportedAttributeType):
        parse_arff(document)


def test_parse_arff_missing_sections():
    with pytest.raises(ArffSyntax):
        parse_arff(b"@relation r\n@attribute a numeric\n1\n")
    with pytest.raises(ArffSyntax):
        parse_arff(b"@attribute a numeric\n@data\n1\n")


def test_parse_arff_rejects_sparse_rows():
    with pytest.raises(ArffSyntax):
        parse_arff(b"@relation r\n@attribute a numeric\n@data\n{0 1}\n")


def test_write_arff_empty_table():
    text = write_arff(RawTable(("a", "b"), np.empty((0, 2))), "empty")
    lines = text.decode().strip().splitlines()
    assert lines[0].lower() == "@relation empty"
    assert lines[-1].lower() == "@data"


def test_write_arff_single_missing_cell():
    table = RawTable(("a", "b"), [[1., np.nan], [2., 3.]])
    text = write_arff(table).decode()
    data = text.lower().split("@data", 1)[1]
    assert data.count("?") == 1


def test_arff_round_trip_with_nominal_column():
    table = RawTable(("x", "Class"), [[1.5, 0.], [2., 1.], [np.nan, 0.]],
                     nominal_values={"Class": ("2", "4")})
    assert parse_arff(write_arff(table)) == table


def test_arff_round_trip_backslash_names():
    table = RawTable(("a \\", "b"), [[1., 2.]])
    text = write_arff(table)
    assert parse_arff(text) == table


def test_write_arff_rejects_quote_bounded_names():
    with pytest.raises(ConfigError):
        write_arff(RawTable(("'a", "b"), [[1., 2.]]))


def test_parse_arff_bad_value_reports_line():
    with pytest.raises(ArffSyntax) as info:
        parse_arff(b"\n\n@relation r\n@attribute a numeric\n@data\nabc\n")
    assert info.value.line == 6


def test_parse_arff_undeclared_nominal_value():
    with pytest.raises(ArffSyntax):
        parse_arff(b"@relation r\n@attribute c {2,4}\n@data\n3\n")


names = st.lists(st.text(alphabet="abcXYZ_- '\\", min_size=1, max_size=6)
                 .filter(lambda x: x[0] != "'" and x[-1] != "'"),
                 min_size=1, max_size=4, unique=True)
cell = st.one_of(st.floats(allow_nan=False, allow_infinity=False),
                 st.integers(-1000, 1000).map(float), st.just(np.nan))


@given(names.flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(cell, min_size=len(n), max_size=len(n)),
                         max_size=8))))
@settings(max_examples=200, deadline=None)
def test_arff_round_trip_identity(table_spec):
    columnNames, rows = table_spec
    cells = np.array(rows, dtype=float).reshape(len(rows), len(columnNames))
    table = RawTable(tuple(columnNames), cells)
    assert parse_arff(write_arff(table, "generated")) == table


#____________________________________________________________________LOAD TABLE
def test_load_table_names_wbc_columns(tmp_path):
    path = tmp_path / "wbc.data"
    path.write_bytes(FIRST_WBC_ROW)
    table = load_table(path)
    assert table.column_names == WBC_COLUMNS
    assert load_table(path, schema="none").column_names[0] == "C_1"


def test_load_table_dispatches_on_extension(tmp_path):
    path = tmp_path / "toy.arff"
    path.write_bytes(MINIMAL_ARFF)
    assert load_table(path).column_names == ("x", "y value")


#_________________________________________________________________PREPROCESSING
def test_drop_missing_rows_keeps_order():
    table = RawTable(("a", "b"), [[1., 2.], [np.nan, 1.], [3., 4.],
                                  [5., np.nan]])
    clean, dropped = drop_missing_rows(table)
    assert clean.cells.tolist() == [[1., 2.], [3., 4.]]
    assert clean.row_ids == (0, 2)
    assert dropped == [1, 3]
    assert not clean.missing_mask().any()


def test_drop_missing_rows_without_missing_cells():
    table = RawTable(("a",), [[1.], [2.]])
    clean, dropped = drop_missing_rows(table)
    assert clean == table
    assert dropped == []


def test_drop_missing_rows_all_rows_missing():
    table = RawTable(("a", "b"), [[np.nan, 1.], [2., np.nan]])
    clean, dropped = drop_missing_rows(table)
    assert clean.n_rows == 0
    assert len(dropped) == 2


def test_drop_missing_rows_reports_id_column():
    table = RawTable(("id", "a"), [[1000025., 1.], [1002945., np.nan]])
    _, dropped = drop_missing_rows(table, id_column="id")
    assert dropped == [1002945]


def test_build_dataset_min_max():
    table = RawTable(("a", "b"), [[2., 7.], [4., 7.], [6., 7.]])
    dataset, report = build_dataset(table)
    assert dataset.features[:, 0].tolist() == [0., 0.5, 1.]
    # constant column
    assert dataset.features[:, 1].tolist() == [0., 0., 0.]
    assert report.norm_params["a"] == (2., 6.)
    assert dataset.normalized


def test_build_dataset_removes_id_and_label():
    table = RawTable(("id", "a", "Class"), [[11., 1., 2.], [12., 3., 4.]])
    dataset, report = build_dataset(table, "id", "Class", normalize=False)
    assert dataset.feature_names == ("a",)
    assert dataset.row_ids == (11, 12)
    assert dataset.labels == (ClassLabel.BENIGN, ClassLabel.MALIGNANT)
    assert report.columns_dropped == ("id", "Class")


def test_build_dataset_errors():
    table = RawTable(("a", "Class"), [[1., 3.]])
    with pytest.raises(UnknownColumn):
        build_dataset(table, label_column="label")
    with pytest.raises(InvalidClassValue):
        build_dataset(table, label_column="Class")
    with pytest.raises(MissingValues):
        build_dataset(RawTable(("a",), [[np.nan]]))


def test_build_dataset_decodes_nominal_labels():
    table = parse_arff(b"@relation r\n@attribute a numeric\n"
                       b"@attribute class {2,4}\n@data\n1,4\n2,2\n")
    dataset, _ = build_dataset(table, label_column="class")
    assert dataset.labels == (ClassLabel.MALIGNANT, ClassLabel.BENIGN)


def test_preprocess_wbc_like(wbc_like_file):
    table = load_table(wbc_like_file)
    before = class_distribution(table, "Class")
    dataset, report = preprocess(table, "Sample code number", "Class")
    assert report.rows_before == 60
    assert report.rows_after == 57
    assert report.rows_dropped == 3
    assert report.dropped_row_ids == (1000000, 1000017, 1000034)
    assert dataset.n_features == 9
    assert sum(before.values()) == 60
    assert sum(dataset.class_counts().values()) == 57
    assert dataset.features.min() == 0.
    assert dataset.features.max() == 1.


@given(st.lists(st.lists(st.integers(1, 10), min_size=3, max_size=3),
                min_size=2, max_size=30))
@settings(max_examples=100, deadline=None)
def test_normalized_extremes_are_exact(rows):
    table = RawTable(("a", "b", "c"), np.array(rows, dtype=float))
    dataset, _ = build_dataset(table)
    for j in range(3):
        column = dataset.features[:, j]
        if len(set(table.cells[:, j])) > 1:
            assert column.min() == 0.
            assert column.max() == 1.
        else:
            assert (column == 0.).all()


def test_preprocess_report_invariant():
    with pytest.raises(DatasetError):
        PreprocessReport(10, 5, 4)


def test_dataset_rejects_out_of_range_normalized_values():
    with pytest.raises(DatasetError):
        Dataset([[0.5], [1.5]], normalized=True)
