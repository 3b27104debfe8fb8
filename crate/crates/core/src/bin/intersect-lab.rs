//! Binary entry point; all logic lives in the library.

fn main() -> std::process::ExitCode {
    intersect_lab::cli_app::main()
}
