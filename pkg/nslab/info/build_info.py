class BuildInfo:
    BUILD_NUMBER = "2026_10_17"
    BRANCH = "main"

    @staticmethod
    def print_info():
        return "(" + BuildInfo.BRANCH + ") " + BuildInfo.BUILD_NUMBER
