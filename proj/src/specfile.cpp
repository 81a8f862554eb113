// placeholder; parser lands with the file-format module
