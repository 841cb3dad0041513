fn main() {
    // die quietly when a downstream pipe closes instead of panicking on EPIPE
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(weylcurves::cli::run(std::env::args().skip(1).collect()));
}
