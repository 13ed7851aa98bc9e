fn main() {
    // Die quietly when stdout is a closed pipe (e.g. `excess analyze | head`)
    // instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(excess::cli::run(std::env::args()));
}
