fn main() {
    std::process::exit(mstab_core::cli::main_with(std::env::args_os()));
}
