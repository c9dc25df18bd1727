from src.output.result_writer import ResultWriter, config_hash, atomic_write, read_data_section, TOOL_VERSION
